#pragma once

#include <cstdint>
#include <optional>

#include "tropctl/matrix.hpp"
#include "tropctl/twosided.hpp"

namespace tropctl {

/// Finitely generated subsemimodule of Zmax^n in canonical form: pruned
/// generators, lexicographically sorted columns, and (in the full domain)
/// every column top-normalized.  Nonpositive-domain semimodules keep the
/// absolute height of their generators, because rescaling upward is not a
/// legal combination there.
class Semimodule {
 public:
  /// Canonicalizes the given generators.  Nonpositive-domain input must
  /// lie in the nonpositive orthant.
  Semimodule(GeneratorSet gens, ScalarDomain domain = ScalarDomain::full);

  static Semimodule trivial(std::size_t dim,
                            ScalarDomain domain = ScalarDomain::full);
  static Semimodule whole_space(std::size_t dim,
                                ScalarDomain domain = ScalarDomain::full);
  static Semimodule from_columns(const TropMatrix& m,
                                 ScalarDomain domain = ScalarDomain::full);

  std::size_t dim() const { return gens_.dim; }
  bool trivial_module() const { return gens_.trivial(); }
  const GeneratorSet& gens() const { return gens_; }
  ScalarDomain domain() const { return domain_; }

 private:
  GeneratorSet gens_;
  ScalarDomain domain_;
};

/// x in span(gens), decided by the residuation round-trip Q (Q\x) = x.
bool membership(const Vec& x, const Semimodule& s);

/// Mutual containment.
bool semimodule_equal(const Semimodule& a, const Semimodule& b);
/// Every generator of a is a member of b.
bool semimodule_subset(const Semimodule& a, const Semimodule& b);

/// {v : v in x and v in y} via the stacked system [P e] z = [e Q] z.
Semimodule intersect(const Semimodule& x, const Semimodule& y);

/// x (-) b = {u : exists w in b with u (+) w in x}, via the system
/// u (+) B lambda = Q mu projected onto u.  Always contains x.
Semimodule ominus(const Semimodule& x, const Semimodule& b);

/// {u : A u in x} via [A e] z = [e Q] z projected onto u.
Semimodule preimage(const TropMatrix& a, const Semimodule& x);

struct VolumeResult {
  enum class Status { finite, requires_all_finite_generators };

  Status status = Status::finite;
  std::int64_t count = 0;

  bool finite() const { return status == Status::finite; }
};

/// Cardinality of {x in K : x_1 (+) ... (+) x_n = 0}, counted by
/// enumerating the box [-Delta_H, 0]^n against membership.  Generators
/// with -inf entries may span a slice of infinite cardinality, so anything
/// but an all-finite generator matrix reports the restriction instead.
VolumeResult volume(const Semimodule& x);

}  // namespace tropctl
