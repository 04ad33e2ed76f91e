#include "tropctl/semimodule.hpp"

#include <atomic>
#include <stdexcept>

#include "tropctl/parallel.hpp"

namespace tropctl {

namespace {

constexpr std::int64_t kVolumeBudget = 50000000;

void require_same_space(const Semimodule& a, const Semimodule& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("semimodules live in different dimensions");
  }
  if (a.domain() != b.domain()) {
    throw std::invalid_argument("semimodules use different scalar domains");
  }
}

// Generators of the solution set, restricted to the nonpositive orthant
// when the domain asks for it (every column shifted so its top is 0).
std::vector<Vec> domain_solutions(const TropMatrix& d, const TropMatrix& c,
                                  ScalarDomain domain) {
  GeneratorSet sol = solve_system(d, c);
  if (domain == ScalarDomain::nonpositive) {
    for (Vec& col : sol.cols) col = top_normalize(col);
  }
  return std::move(sol.cols);
}

}  // namespace

Semimodule::Semimodule(GeneratorSet gens, ScalarDomain domain)
    : gens_(std::move(gens)), domain_(domain) {
  if (domain_ == ScalarDomain::nonpositive) {
    for (const Vec& col : gens_.cols)
      for (Scalar s : col)
        if (Scalar::finite(0) < s) {
          throw std::invalid_argument(
              "nonpositive-domain generators must lie in the orthant");
        }
  }
  gens_ = minimize_generators(gens_, domain_);
}

Semimodule Semimodule::trivial(std::size_t dim, ScalarDomain domain) {
  return Semimodule(GeneratorSet{dim, {}}, domain);
}

Semimodule Semimodule::whole_space(std::size_t dim, ScalarDomain domain) {
  return Semimodule(identity_generators(dim), domain);
}

Semimodule Semimodule::from_columns(const TropMatrix& m, ScalarDomain domain) {
  GeneratorSet g{m.rows(), {}};
  for (std::size_t j = 0; j < m.cols(); ++j) g.cols.push_back(m.col(j));
  return Semimodule(std::move(g), domain);
}

bool membership(const Vec& x, const Semimodule& s) {
  return span_member(x, s.gens(), s.domain());
}

bool semimodule_subset(const Semimodule& a, const Semimodule& b) {
  require_same_space(a, b);
  for (const Vec& g : a.gens().cols)
    if (!membership(g, b)) return false;
  return true;
}

bool semimodule_equal(const Semimodule& a, const Semimodule& b) {
  return semimodule_subset(a, b) && semimodule_subset(b, a);
}

Semimodule intersect(const Semimodule& x, const Semimodule& y) {
  require_same_space(x, y);
  const std::size_t n = x.dim();
  if (x.trivial_module() || y.trivial_module()) {
    return Semimodule::trivial(n, x.domain());
  }
  const std::size_t p = x.gens().cols.size();
  const std::size_t q = y.gens().cols.size();
  // [P e] z = [e Q] z over z = (rho, sigma).
  TropMatrix d(n, p + q), c(n, p + q);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t i = 0; i < n; ++i) d.at(i, j) = x.gens().cols[j][i];
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t i = 0; i < n; ++i) c.at(i, p + j) = y.gens().cols[j][i];

  GeneratorSet out{n, {}};
  for (const Vec& z : domain_solutions(d, c, x.domain())) {
    Vec v(n, Scalar::neg_inf());
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t i = 0; i < n; ++i)
        v[i] = trop_add(v[i], trop_mul(z[j], x.gens().cols[j][i]));
    if (!is_eps(v)) out.cols.push_back(std::move(v));
  }
  return Semimodule(std::move(out), x.domain());
}

Semimodule ominus(const Semimodule& x, const Semimodule& b) {
  require_same_space(x, b);
  const std::size_t n = x.dim();
  const std::size_t q = b.gens().cols.size();
  const std::size_t p = x.gens().cols.size();
  // u (+) B lambda = Q mu over z = (u, lambda, mu).
  TropMatrix d(n, n + q + p), c(n, n + q + p);
  for (std::size_t i = 0; i < n; ++i) d.at(i, i) = Scalar::finite(0);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t i = 0; i < n; ++i) d.at(i, n + j) = b.gens().cols[j][i];
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t i = 0; i < n; ++i)
      c.at(i, n + q + j) = x.gens().cols[j][i];

  GeneratorSet out{n, {}};
  for (const Vec& z : domain_solutions(d, c, x.domain())) {
    Vec u(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
    if (!is_eps(u)) out.cols.push_back(std::move(u));
  }
  return Semimodule(std::move(out), x.domain());
}

Semimodule preimage(const TropMatrix& a, const Semimodule& x) {
  if (a.rows() != x.dim()) {
    throw std::invalid_argument("preimage dimension mismatch");
  }
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t p = x.gens().cols.size();
  // A u = Q mu over z = (u, mu).
  TropMatrix d(m, n + p), c(m, n + p);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) d.at(i, j) = a.at(i, j);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t i = 0; i < m; ++i) c.at(i, n + j) = x.gens().cols[j][i];

  GeneratorSet out{n, {}};
  for (const Vec& z : domain_solutions(d, c, x.domain())) {
    Vec u(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n));
    if (!is_eps(u)) out.cols.push_back(std::move(u));
  }
  return Semimodule(std::move(out), x.domain());
}

VolumeResult volume(const Semimodule& x) {
  if (x.domain() != ScalarDomain::full) {
    throw std::domain_error("volume is defined over Zmax generators");
  }
  if (x.trivial_module()) return VolumeResult{VolumeResult::Status::finite, 0};
  for (const Vec& g : x.gens().cols) {
    for (Scalar s : g) {
      if (!s.is_finite()) {
        return VolumeResult{
            VolumeResult::Status::requires_all_finite_generators, 0};
      }
    }
  }
  const std::size_t n = x.dim();
  const std::int64_t delta = delta_hilbert(x.gens().matrix());
  const std::int64_t side = delta + 1;

  std::int64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(total, side, &total) || total > kVolumeBudget) {
      throw std::runtime_error("volume enumeration box is too large");
    }
  }

  const std::size_t points = static_cast<std::size_t>(total);
  std::atomic<std::int64_t> count{0};
  parallel_chunks(points, [&](std::size_t lo, std::size_t hi) {
    std::int64_t local = 0;
    Vec v(n);
    for (std::size_t idx = lo; idx < hi; ++idx) {
      std::size_t rest = idx;
      bool has_zero = false;
      for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t coord =
            -static_cast<std::int64_t>(rest % static_cast<std::size_t>(side));
        rest /= static_cast<std::size_t>(side);
        if (coord == 0) has_zero = true;
        v[i] = Scalar::finite(coord);
      }
      if (has_zero && membership(v, x)) ++local;
    }
    count += local;
  });
  return VolumeResult{VolumeResult::Status::finite, count.load()};
}

}  // namespace tropctl
