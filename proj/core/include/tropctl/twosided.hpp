#pragma once

#include <cstddef>
#include <vector>

#include "tropctl/matrix.hpp"
#include "tropctl/scalar.hpp"

namespace tropctl {

/// Homogeneous two-sided system D x = C x over Zmax.
struct TwoSidedSystem {
  TropMatrix d;
  TropMatrix c;

  TwoSidedSystem(TropMatrix d_in, TropMatrix c_in);
};

/// Finitely many generators of a subsemimodule of Zmax^n, stored as
/// columns.  Invariants: no +inf entries, the all -inf column is never
/// stored (the trivial semimodule has no columns at all).
struct GeneratorSet {
  std::size_t dim = 0;
  std::vector<Vec> cols;

  bool trivial() const { return cols.empty(); }
  TropMatrix matrix() const;  // requires at least one column
};

GeneratorSet identity_generators(std::size_t n);

/// x_max - shifted copy of a column so its top entry is 0; the all -inf
/// column is returned unchanged.
Vec top_normalize(const Vec& v);
bool is_eps(const Vec& v);

/// Membership x in span(cols) decided by the residuation round-trip.  In
/// the nonpositive domain coefficients are clamped at 0 and vectors above
/// the orthant are rejected outright.
bool span_member(const Vec& x, const GeneratorSet& g,
                 ScalarDomain domain = ScalarDomain::full);

/// Span-preserving pruning: normalize (full domain only), deduplicate,
/// drop columns that are combinations of the rest, sort columns.
GeneratorSet minimize_generators(const GeneratorSet& g,
                                 ScalarDomain domain = ScalarDomain::full);

/// Generators of the hyperplane {x : a x = b x} for rows a, b over Zmax.
GeneratorSet solve_hyperplane(const Vec& a, const Vec& b);

/// Generators of {x : D x = C x} by sequential elimination: the equations
/// are processed in row order, each one through a hyperplane solve in the
/// current generator coordinates, with pruning after every step.
GeneratorSet solve_system(const TwoSidedSystem& sys);
GeneratorSet solve_system(const TropMatrix& d, const TropMatrix& c);

/// E x <= x recast as the equivalent system (E (+) I) x = I x.
TwoSidedSystem fold_inequality(const TropMatrix& e);

}  // namespace tropctl
