#pragma once

#include <cstddef>
#include <functional>

namespace tropctl {

/// Worker budget for the solver's internal parallelism.  Reads
/// TROPCTL_THREADS once (values >= 1); defaults to a small multiple of the
/// hardware concurrency.
std::size_t thread_budget();

/// Runs fn(begin, end) over a partition of [0, n) on up to thread_budget()
/// workers.  Chunks are fixed by n and the budget alone, so callers that
/// write to disjoint preallocated slots (or combine chunk results in chunk
/// order) stay byte-deterministic.  Small ranges run inline.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace tropctl
