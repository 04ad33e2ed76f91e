#include "tropctl/feedback.hpp"

#include <algorithm>
#include <stdexcept>

#include "tropctl/twosided.hpp"

namespace tropctl {

namespace {

void require_shapes(const TropMatrix& a, const TropMatrix& b,
                    const Semimodule& x) {
  if (!a.is_square() || a.rows() != x.dim() || b.rows() != x.dim()) {
    throw std::invalid_argument("feedback shapes are not conformable");
  }
}

}  // namespace

FeedbackResult solve_feedback(const TropMatrix& a, const TropMatrix& b,
                              const Semimodule& x) {
  require_shapes(a, b, x);
  const std::size_t n = a.rows();
  const std::size_t q = b.cols();

  if (x.trivial_module()) {
    // Nothing to keep invariant; any F works, the all -inf one canonically.
    return FeedbackResult{FeedbackResult::Status::found,
                          TropMatrix::eps(q, n), std::nullopt};
  }

  const TropMatrix qmat = x.gens().matrix();
  const std::size_t r = qmat.cols();
  const TropMatrix aq = mat_mul(a, qmat);

  // Unknown vector z = (t, F row-major, G row-major).
  const std::size_t f_base = 1;
  const std::size_t g_base = 1 + q * n;
  const std::size_t nvars = 1 + q * n + r * r;
  const auto f_at = [&](std::size_t u, std::size_t k) {
    return f_base + u * n + k;
  };
  const auto g_at = [&](std::size_t g, std::size_t j) {
    return g_base + g * r + j;
  };

  // (A t (+) B F) Q = Q G, one equation per entry.  Rows where B is
  // entirely -inf only tie t to one column of G; putting them first keeps
  // the elimination lean.
  std::vector<bool> controlled(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < q; ++u)
      if (!b.at(i, u).is_neg_inf()) controlled[i] = true;

  TropMatrix d(n * r, nvars), c(n * r, nvars);
  std::size_t row = 0;
  for (const bool want_controlled : {false, true}) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (controlled[i] != want_controlled) continue;
        d.at(row, 0) = aq.at(i, j);
        for (std::size_t u = 0; u < q; ++u) {
          if (b.at(i, u).is_neg_inf()) continue;
          for (std::size_t k = 0; k < n; ++k) {
            d.at(row, f_at(u, k)) = trop_mul(b.at(i, u), qmat.at(k, j));
          }
        }
        for (std::size_t g = 0; g < r; ++g) {
          c.at(row, g_at(g, j)) = qmat.at(i, g);
        }
        ++row;
      }
    }
  }

  const auto witness_to_result =
      [&](const Vec& w) -> std::optional<FeedbackResult> {
    Vec z = w;
    if (x.domain() == ScalarDomain::nonpositive) {
      z = top_normalize(z);
      if (z[0] != Scalar::finite(0)) return std::nullopt;
    } else {
      if (!z[0].is_finite()) return std::nullopt;
      z = scale_vec(neg(z[0]), z);
    }
    TropMatrix f(q, n), g(r, r);
    for (std::size_t u = 0; u < q; ++u)
      for (std::size_t k = 0; k < n; ++k) f.at(u, k) = z[f_at(u, k)];
    for (std::size_t gi = 0; gi < r; ++gi)
      for (std::size_t j = 0; j < r; ++j) g.at(gi, j) = z[g_at(gi, j)];
    const TropMatrix closed = oplus(a, mat_mul(b, f));
    if (mat_mul(closed, qmat) != mat_mul(qmat, g)) {
      throw std::logic_error("feedback witness fails its defining equation");
    }
    return FeedbackResult{FeedbackResult::Status::found, std::move(f),
                          std::move(g)};
  };

  // Witness-only fast path: a finite sub-fixed point of the min-max
  // function solves the system outright and skips the elimination.  It
  // can never certify nonexistence.
  if (const auto w = minmax_subfixed(d, c, 20000, -1000000)) {
    if (auto result = witness_to_result(*w)) return *std::move(result);
  }

  const GeneratorSet solutions = solve_system(d, c);
  for (const Vec& z : solutions.cols) {
    if (auto result = witness_to_result(z)) return *std::move(result);
  }
  return FeedbackResult{FeedbackResult::Status::not_algebraically_invariant,
                        std::nullopt, std::nullopt};
}

bool check_feedback(const TropMatrix& a, const TropMatrix& b,
                    const TropMatrix& f, const Semimodule& x) {
  require_shapes(a, b, x);
  if (f.rows() != b.cols() || f.cols() != a.cols()) {
    throw std::invalid_argument("feedback matrix has the wrong shape");
  }
  const TropMatrix closed = oplus(a, mat_mul(b, f));
  for (const Vec& g : x.gens().cols) {
    if (!membership(mat_vec(closed, g), x)) return false;
  }
  return true;
}

std::optional<Vec> minmax_subfixed(const TropMatrix& d, const TropMatrix& c,
                                   std::size_t iteration_bound,
                                   std::int64_t floor) {
  if (d.rows() != c.rows() || d.cols() != c.cols()) {
    throw std::invalid_argument("min-max sides must share a shape");
  }
  if (iteration_bound < 1) {
    throw std::invalid_argument("iteration bound must be at least 1");
  }
  const std::size_t n = d.cols();
  const Scalar floor_s = Scalar::finite(floor);

  Vec x(n, Scalar::finite(0));
  for (std::size_t iter = 0; iter < iteration_bound; ++iter) {
    const Vec fx = oplus_vec(residual_vec(d, mat_vec(c, x)),
                             residual_vec(c, mat_vec(d, x)), Mode::min);
    if (entrywise_le(x, fx)) {
      for (Scalar s : x)
        if (s < floor_s) return std::nullopt;
      return x;
    }
    x = oplus_vec(x, fx, Mode::min);
    for (Scalar s : x)
      if (s < floor_s) return std::nullopt;
  }
  return std::nullopt;
}

EigenResult eigen(const TropMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("eigen needs a square matrix");
  const std::optional<Rational> rho = spectral_radius(m);
  if (!rho) {
    throw std::domain_error("acyclic matrix has no finite eigenvalue");
  }

  EigenResult result{*rho, {}};
  if (!rho->is_integer()) return result;

  const TropMatrix shifted = scale(Scalar::finite(-rho->num), m);
  const StarResult star = kleene_star(shifted);
  if (star.diverged()) {
    throw std::logic_error("star of the lambda-shifted matrix must converge");
  }
  const TropMatrix plus = mat_mul(shifted, *star.star);
  std::vector<Vec> vs;
  for (std::size_t v = 0; v < m.rows(); ++v) {
    if (plus.at(v, v) == Scalar::finite(0)) {
      vs.push_back(top_normalize(star.star->col(v)));
    }
  }
  std::sort(vs.begin(), vs.end(),
            [](const Vec& a, const Vec& b) {
              return std::lexicographical_compare(a.begin(), a.end(),
                                                  b.begin(), b.end());
            });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  result.eigenvectors = std::move(vs);
  return result;
}

}  // namespace tropctl
