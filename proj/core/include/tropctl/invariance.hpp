#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropctl/semimodule.hpp"

namespace tropctl {

/// Trace of the fixed-point iteration X_1 = K, X_{r+1} = phi(X_r).
/// Steps are weakly decreasing under inclusion; stabilized_at = k means
/// X_{k+1} = X_k, in which case result is the maximal geometrically
/// (A,B)-invariant semimodule contained in K.  When the cap is hit no
/// result is named (whether the set limit is still invariant is open).
struct InvarianceReport {
  std::vector<Semimodule> steps;
  std::optional<std::size_t> stabilized_at;  // 1-based
  bool cap_exceeded = false;
  std::optional<Semimodule> result;
  /// (Delta_H + 1)^n - Delta_H^n + 1 when every generator of K is finite.
  std::optional<std::int64_t> hilbert_bound;
};

/// phi(X) = X  intersect  A^-1(X (-) Im B).  Monotone and contracting.
Semimodule phi(const Semimodule& x, const TropMatrix& a, const TropMatrix& b);

/// Runs the iteration until two consecutive steps agree (semantic
/// equality) or `cap` semimodules have been produced.
InvarianceReport max_invariant(const Semimodule& k, const TropMatrix& a,
                               const TropMatrix& b, std::size_t cap);

/// True iff A g lands in X (-) Im B for every generator g; equivalently
/// X = phi(X).
bool check_geometric_invariance(const Semimodule& x, const TropMatrix& a,
                                const TropMatrix& b);

}  // namespace tropctl
