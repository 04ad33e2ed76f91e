#include "tropctl/twosided.hpp"

#include <algorithm>
#include <stdexcept>

#include "tropctl/parallel.hpp"

namespace tropctl {

namespace {

constexpr std::size_t kColumnExplosionLimit = 200000;

void require_zmax(const TropMatrix& m, const char* what) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j).is_pos_inf()) {
        throw std::invalid_argument(std::string(what) +
                                    " must not contain +inf");
      }
}

void require_zmax(const Vec& v, const char* what) {
  for (Scalar s : v)
    if (s.is_pos_inf()) {
      throw std::invalid_argument(std::string(what) +
                                  " must not contain +inf");
    }
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_columns(std::vector<Vec>& cols) {
  std::sort(cols.begin(), cols.end(), lex_less);
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
}

// Membership of x in the span of the active columns, skipping column
// `skip` (pass cols.size() to use them all).
bool member_skip(const Vec& x, const std::vector<Vec>& cols,
                 const std::vector<bool>& active, std::size_t skip,
                 ScalarDomain domain) {
  const std::size_t n = x.size();
  if (domain == ScalarDomain::nonpositive) {
    for (Scalar s : x)
      if (Scalar::finite(0) < s) return false;
  }
  Vec acc(n, Scalar::neg_inf());
  bool any = false;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (c == skip || !active[c]) continue;
    // Greatest coefficient keeping lambda (x) col <= x.
    Scalar lambda = Scalar::pos_inf();
    for (std::size_t i = 0; i < n; ++i) {
      lambda = trop_add(lambda, trop_mul(x[i], neg(cols[c][i]), Mode::min),
                        Mode::min);
    }
    if (domain == ScalarDomain::nonpositive) {
      lambda = trop_add(lambda, Scalar::finite(0), Mode::min);
    }
    if (lambda.is_neg_inf()) continue;
    any = true;
    for (std::size_t i = 0; i < n; ++i) {
      acc[i] = trop_add(acc[i], trop_mul(lambda, cols[c][i], Mode::max));
    }
  }
  if (!any) return is_eps(x);
  return acc == x;
}

}  // namespace

TwoSidedSystem::TwoSidedSystem(TropMatrix d_in, TropMatrix c_in)
    : d(std::move(d_in)), c(std::move(c_in)) {
  if (d.rows() != c.rows() || d.cols() != c.cols()) {
    throw std::invalid_argument("two-sided system sides must share a shape");
  }
  require_zmax(d, "system matrix D");
  require_zmax(c, "system matrix C");
}

TropMatrix GeneratorSet::matrix() const {
  if (cols.empty()) {
    throw std::domain_error("trivial generator set has no matrix form");
  }
  TropMatrix m(dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

GeneratorSet identity_generators(std::size_t n) {
  GeneratorSet g{n, {}};
  g.cols.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Vec e(n, Scalar::neg_inf());
    e[k] = Scalar::finite(0);
    g.cols.push_back(std::move(e));
  }
  return g;
}

bool is_eps(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](Scalar s) { return s.is_neg_inf(); });
}

Vec top_normalize(const Vec& v) {
  Scalar top = Scalar::neg_inf();
  for (Scalar s : v) top = trop_add(top, s);
  if (top.is_neg_inf()) return v;
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = trop_mul(neg(top), v[i]);
  return r;
}

bool span_member(const Vec& x, const GeneratorSet& g, ScalarDomain domain) {
  if (x.size() != g.dim) {
    throw std::invalid_argument("span_member dimension mismatch");
  }
  require_zmax(x, "membership query");
  const std::vector<bool> active(g.cols.size(), true);
  return member_skip(x, g.cols, active, g.cols.size(), domain);
}

GeneratorSet minimize_generators(const GeneratorSet& g, ScalarDomain domain) {
  GeneratorSet out{g.dim, {}};
  out.cols.reserve(g.cols.size());
  for (const Vec& c : g.cols) {
    if (is_eps(c)) continue;
    out.cols.push_back(domain == ScalarDomain::full ? top_normalize(c) : c);
  }
  sort_columns(out.cols);

  // Forward prefilter: a column already spanned by the survivors so far
  // can never be needed.  This keeps the exact quadratic pass below small.
  std::vector<Vec> kept;
  {
    std::vector<bool> all_active;
    for (Vec& c : out.cols) {
      all_active.assign(kept.size(), true);
      if (!member_skip(c, kept, all_active, kept.size(), domain)) {
        kept.push_back(std::move(c));
      }
    }
  }

  std::vector<bool> active(kept.size(), true);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (member_skip(kept[i], kept, active, i, domain)) {
      active[i] = false;
    }
  }
  out.cols.clear();
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (active[i]) out.cols.push_back(std::move(kept[i]));
  return out;
}

namespace {

// Units and pair vectors spanning {x : a x = b x}, without pruning.
GeneratorSet raw_hyperplane(const Vec& a, const Vec& b) {
  const std::size_t n = a.size();
  GeneratorSet g{n, {}};

  // Coordinates where the two rows tie span freely.
  std::vector<bool> tied(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] == b[k]) {
      tied[k] = true;
      Vec e(n, Scalar::neg_inf());
      e[k] = Scalar::finite(0);
      g.cols.push_back(std::move(e));
    }
  }

  // One generator per (a-side, b-side) pair: coordinate i carries the
  // a-dominant term, coordinate j the b-dominant term, balanced so both
  // sides of the equation evaluate to a_i.  Ties may serve either side;
  // tie/tie pairs are already covered by the unit vectors.
  std::vector<std::size_t> lhs, rhs;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_finite() && b[i] <= a[i]) lhs.push_back(i);
    if (b[i].is_finite() && a[i] <= b[i]) rhs.push_back(i);
  }
  const std::size_t npairs = lhs.size() * rhs.size();
  std::vector<Vec> pairs(npairs);
  parallel_chunks(npairs, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t) {
      const std::size_t i = lhs[t / rhs.size()];
      const std::size_t j = rhs[t % rhs.size()];
      if (i == j || (tied[i] && tied[j])) continue;
      Vec w(n, Scalar::neg_inf());
      w[i] = Scalar::finite(0);
      w[j] = trop_mul(a[i], neg(b[j]));
      pairs[t] = std::move(w);
    }
  });
  for (auto& w : pairs) {
    if (!w.empty()) g.cols.push_back(std::move(w));
  }
  return g;
}

}  // namespace

GeneratorSet solve_hyperplane(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("hyperplane rows must share a length");
  }
  if (a.empty()) throw std::invalid_argument("hyperplane rows are empty");
  require_zmax(a, "hyperplane row a");
  require_zmax(b, "hyperplane row b");
  return minimize_generators(raw_hyperplane(a, b));
}

GeneratorSet solve_system(const TwoSidedSystem& sys) {
  const std::size_t n = sys.d.cols();
  GeneratorSet q = identity_generators(n);
  for (std::size_t r = 0; r < sys.d.rows(); ++r) {
    if (q.trivial()) break;
    const std::size_t p = q.cols.size();
    Vec a(p, Scalar::neg_inf()), b(p, Scalar::neg_inf());
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        a[j] = trop_add(a[j], trop_mul(sys.d.at(r, k), q.cols[j][k]));
        b[j] = trop_add(b[j], trop_mul(sys.c.at(r, k), q.cols[j][k]));
      }
    }
    // The unpruned hyperplane basis is mapped back to x-space first; the
    // pruning is far cheaper in the ambient dimension than in the
    // generator coordinates.
    const GeneratorSet h = raw_hyperplane(a, b);
    GeneratorSet next{n, {}};
    next.cols.reserve(h.cols.size());
    for (const Vec& y : h.cols) {
      Vec col(n, Scalar::neg_inf());
      for (std::size_t j = 0; j < p; ++j) {
        if (y[j].is_neg_inf()) continue;
        for (std::size_t k = 0; k < n; ++k) {
          col[k] = trop_add(col[k], trop_mul(y[j], q.cols[j][k]));
        }
      }
      if (!is_eps(col)) next.cols.push_back(std::move(col));
    }
    if (next.cols.size() > kColumnExplosionLimit) {
      throw std::runtime_error("elimination exceeded the generator budget");
    }
    q = minimize_generators(next);
  }
  return q;
}

GeneratorSet solve_system(const TropMatrix& d, const TropMatrix& c) {
  return solve_system(TwoSidedSystem(d, c));
}

TwoSidedSystem fold_inequality(const TropMatrix& e) {
  if (!e.is_square()) {
    throw std::invalid_argument("fold_inequality needs a square matrix");
  }
  const TropMatrix id = TropMatrix::identity(e.rows());
  return TwoSidedSystem(oplus(e, id), id);
}

}  // namespace tropctl
