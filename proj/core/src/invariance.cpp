#include "tropctl/invariance.hpp"

#include <stdexcept>

namespace tropctl {

namespace {

void require_shapes(const Semimodule& x, const TropMatrix& a,
                    const TropMatrix& b) {
  if (!a.is_square() || a.rows() != x.dim() || b.rows() != x.dim()) {
    throw std::invalid_argument("invariance shapes are not conformable");
  }
}

std::optional<std::int64_t> stabilization_bound(const Semimodule& k) {
  if (k.trivial_module()) return 1;
  for (const Vec& g : k.gens().cols)
    for (Scalar s : g)
      if (!s.is_finite()) return std::nullopt;

  const std::int64_t delta = delta_hilbert(k.gens().matrix());
  std::int64_t hi = 1, lo = 1;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    if (__builtin_mul_overflow(hi, delta + 1, &hi) ||
        __builtin_mul_overflow(lo, delta, &lo)) {
      return std::nullopt;  // bound exists but does not fit; leave it out
    }
  }
  return hi - lo + 1;
}

}  // namespace

Semimodule phi(const Semimodule& x, const TropMatrix& a, const TropMatrix& b) {
  require_shapes(x, a, b);
  const Semimodule im_b = Semimodule::from_columns(b, x.domain());
  return intersect(x, preimage(a, ominus(x, im_b)));
}

InvarianceReport max_invariant(const Semimodule& k, const TropMatrix& a,
                               const TropMatrix& b, std::size_t cap) {
  require_shapes(k, a, b);
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");

  InvarianceReport report;
  report.hilbert_bound = stabilization_bound(k);
  report.steps.push_back(k);
  while (report.steps.size() < cap) {
    Semimodule next = phi(report.steps.back(), a, b);
    const bool fixed = semimodule_equal(next, report.steps.back());
    report.steps.push_back(std::move(next));
    if (fixed) {
      report.stabilized_at = report.steps.size() - 1;
      report.result = report.steps.back();
      return report;
    }
  }
  report.cap_exceeded = true;
  return report;
}

bool check_geometric_invariance(const Semimodule& x, const TropMatrix& a,
                                const TropMatrix& b) {
  require_shapes(x, a, b);
  const Semimodule reachable =
      ominus(x, Semimodule::from_columns(b, x.domain()));
  for (const Vec& g : x.gens().cols) {
    if (!membership(mat_vec(a, g), reachable)) return false;
  }
  return true;
}

}  // namespace tropctl
