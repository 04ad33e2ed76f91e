#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropctl/rational.hpp"
#include "tropctl/semimodule.hpp"

namespace tropctl {

/// Outcome of the linear state feedback synthesis for (A (+) B F) X c X.
/// When found, (A (+) B F) Q = Q G holds entrywise for the stored
/// generator matrix Q.  G is absent for the trivial semimodule (its
/// generator matrix has width 0).
struct FeedbackResult {
  enum class Status { found, not_algebraically_invariant };

  Status status = Status::not_algebraically_invariant;
  std::optional<TropMatrix> f;
  std::optional<TropMatrix> g;

  bool found() const { return status == Status::found; }
};

/// Decides algebraic (A,B)-invariance of X = Im Q through the homogenized
/// system (A t (+) B F) Q = Q G.  A bounded min-max sub-fixed-point search
/// runs first and may produce a verified witness cheaply; otherwise the
/// elimination computes the full solution semimodule and its generators
/// are scanned for one with t != -inf (t = 0 after normalization in the
/// nonpositive domain).  A not_algebraically_invariant verdict only ever
/// comes from the elimination route, so it is a proof of nonexistence.
FeedbackResult solve_feedback(const TropMatrix& a, const TropMatrix& b,
                              const Semimodule& x);

/// True iff (A (+) B F) g stays in X for every generator g.
bool check_feedback(const TropMatrix& a, const TropMatrix& b,
                    const TropMatrix& f, const Semimodule& x);

/// Sub-fixed-point search for the min-max function
/// f(x) = min(D\(Cx), C\(Dx)): iterates x <- x /\ f(x) from the zero
/// vector and returns the first x with x <= f(x) and all entries >= floor.
/// Such an x satisfies D x = C x.  This is a witness-only fast path; a
/// nullopt (bound or floor hit) is inconclusive.
std::optional<Vec> minmax_subfixed(const TropMatrix& d, const TropMatrix& c,
                                   std::size_t iteration_bound,
                                   std::int64_t floor);

/// Spectral data: lambda is the maximal circuit mean (error on acyclic
/// matrices); eigenvectors (reported only for integer lambda) are the
/// critical columns of ((-lambda) M)*, deduplicated projectively.  Every
/// reported v satisfies M v = lambda (x) v exactly; for an irreducible M
/// they span the whole eigenspace.
struct EigenResult {
  Rational lambda;
  std::vector<Vec> eigenvectors;
};

EigenResult eigen(const TropMatrix& m);

}  // namespace tropctl
