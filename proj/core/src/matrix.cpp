#include "tropctl/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropctl {

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, Scalar fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::finite(0);
  return m;
}

TropMatrix TropMatrix::eps(std::size_t rows, std::size_t cols) {
  return TropMatrix(rows, cols);
}

Vec TropMatrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec TropMatrix::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

void TropMatrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool TropMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](Scalar s) { return s.is_finite(); });
}

TropMatrix oplus(const TropMatrix& a, const TropMatrix& b, Mode mode) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("oplus shape mismatch");
  }
  TropMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r.at(i, j) = trop_add(a.at(i, j), b.at(i, j), mode);
  return r;
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b, Mode mode) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul inner dimension mismatch");
  }
  const Scalar neutral =
      mode == Mode::max ? Scalar::neg_inf() : Scalar::pos_inf();
  TropMatrix r(a.rows(), b.cols(), neutral);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a.at(i, k);
      if (mode == Mode::max && aik.is_neg_inf()) continue;
      if (mode == Mode::min && aik.is_pos_inf()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        r.at(i, j) =
            trop_add(r.at(i, j), trop_mul(aik, b.at(k, j), mode), mode);
      }
    }
  }
  return r;
}

Vec mat_vec(const TropMatrix& a, const Vec& x, Mode mode) {
  if (a.cols() != x.size()) {
    throw std::invalid_argument("mat_vec dimension mismatch");
  }
  const Scalar neutral =
      mode == Mode::max ? Scalar::neg_inf() : Scalar::pos_inf();
  Vec r(a.rows(), neutral);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      r[i] = trop_add(r[i], trop_mul(a.at(i, k), x[k], mode), mode);
  return r;
}

Vec row_mat(const Vec& x, const TropMatrix& a, Mode mode) {
  if (a.rows() != x.size()) {
    throw std::invalid_argument("row_mat dimension mismatch");
  }
  const Scalar neutral =
      mode == Mode::max ? Scalar::neg_inf() : Scalar::pos_inf();
  Vec r(a.cols(), neutral);
  for (std::size_t k = 0; k < a.rows(); ++k)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r[j] = trop_add(r[j], trop_mul(x[k], a.at(k, j), mode), mode);
  return r;
}

TropMatrix transpose(const TropMatrix& a) {
  TropMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

TropMatrix scale(Scalar lambda, const TropMatrix& a, Mode mode) {
  TropMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r.at(i, j) = trop_mul(lambda, a.at(i, j), mode);
  return r;
}

Vec scale_vec(Scalar lambda, const Vec& x, Mode mode) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = trop_mul(lambda, x[i], mode);
  return r;
}

Vec oplus_vec(const Vec& a, const Vec& b, Mode mode) {
  if (a.size() != b.size()) throw std::invalid_argument("oplus_vec mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = trop_add(a[i], b[i], mode);
  return r;
}

bool entrywise_le(const TropMatrix& a, const TropMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("entrywise_le shape mismatch");
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (b.at(i, j) < a.at(i, j)) return false;
  return true;
}

bool entrywise_le(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("entrywise_le mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

TropMatrix left_residual(const TropMatrix& d, const TropMatrix& c) {
  if (d.rows() != c.rows()) {
    throw std::invalid_argument("left_residual row mismatch");
  }
  TropMatrix r(d.cols(), c.cols(), Scalar::pos_inf());
  for (std::size_t k = 0; k < d.cols(); ++k)
    for (std::size_t j = 0; j < c.cols(); ++j)
      for (std::size_t i = 0; i < d.rows(); ++i)
        r.at(k, j) = trop_add(
            r.at(k, j), trop_mul(c.at(i, j), neg(d.at(i, k)), Mode::min),
            Mode::min);
  return r;
}

TropMatrix right_residual(const TropMatrix& c, const TropMatrix& d) {
  return transpose(left_residual(transpose(d), transpose(c)));
}

Vec residual_vec(const TropMatrix& q, const Vec& x) {
  if (q.rows() != x.size()) {
    throw std::invalid_argument("residual_vec dimension mismatch");
  }
  Vec r(q.cols(), Scalar::pos_inf());
  for (std::size_t k = 0; k < q.cols(); ++k)
    for (std::size_t i = 0; i < q.rows(); ++i)
      r[k] = trop_add(r[k], trop_mul(x[i], neg(q.at(i, k)), Mode::min),
                      Mode::min);
  return r;
}

namespace {

// Strongly connected components of the precedence graph (arc i -> j when
// a_ji != -inf), iterative Tarjan.  Returns the component id of each node.
std::vector<std::size_t> scc_ids(const TropMatrix& a, std::size_t& count) {
  const std::size_t n = a.rows();
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!a.at(j, i).is_neg_inf()) succ[i].push_back(j);

  constexpr std::size_t undef = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, undef), low(n, 0), comp(n, undef);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0;
  count = 0;

  struct Frame {
    std::size_t v;
    std::size_t child;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != undef) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < succ[f.v].size()) {
        const std::size_t w = succ[f.v][f.child++];
        if (index[w] == undef) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          while (true) {
            const std::size_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = count;
            if (w == f.v) break;
          }
          ++count;
        }
        const std::size_t v = f.v;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
      }
    }
  }
  return comp;
}

std::int64_t checked_sum(std::int64_t a, std::int64_t b) {
  std::int64_t s;
  if (__builtin_add_overflow(a, b, &s)) {
    throw std::overflow_error("path weight overflows 64-bit");
  }
  return s;
}

}  // namespace

std::optional<Rational> spectral_radius(const TropMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("spectral_radius needs a square matrix");
  }
  const std::size_t n = a.rows();
  std::size_t ncomp = 0;
  const std::vector<std::size_t> comp = scc_ids(a, ncomp);

  std::optional<Rational> best;
  for (std::size_t c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> nodes;
    for (std::size_t v = 0; v < n; ++v)
      if (comp[v] == c) nodes.push_back(v);
    const std::size_t m = nodes.size();
    // A component without an internal arc has no cycle.
    bool has_arc = false;
    for (std::size_t u : nodes) {
      for (std::size_t v : nodes) {
        if (!a.at(v, u).is_neg_inf()) has_arc = true;
      }
    }
    if (!has_arc) continue;

    std::vector<std::size_t> pos(n, 0);
    for (std::size_t i = 0; i < m; ++i) pos[nodes[i]] = i;

    // Karp's recurrence on maximal path weights from an arbitrary source.
    const Scalar none = Scalar::neg_inf();
    std::vector<std::vector<Scalar>> dist(m + 1, std::vector<Scalar>(m, none));
    dist[0][0] = Scalar::finite(0);
    for (std::size_t k = 1; k <= m; ++k) {
      for (std::size_t ui = 0; ui < m; ++ui) {
        if (!dist[k - 1][ui].is_finite()) continue;
        const std::size_t u = nodes[ui];
        for (std::size_t vi = 0; vi < m; ++vi) {
          const Scalar w = a.at(nodes[vi], u);
          if (w.is_neg_inf()) continue;
          const Scalar cand = Scalar::finite(
              checked_sum(dist[k - 1][ui].value(), w.value()));
          dist[k][vi] = trop_add(dist[k][vi], cand);
        }
      }
    }
    for (std::size_t vi = 0; vi < m; ++vi) {
      if (!dist[m][vi].is_finite()) continue;
      std::optional<Rational> vmin;
      for (std::size_t k = 0; k < m; ++k) {
        if (!dist[k][vi].is_finite()) continue;
        Rational r(dist[m][vi].value() - dist[k][vi].value(),
                   static_cast<std::int64_t>(m - k));
        if (!vmin || r < *vmin) vmin = r;
      }
      if (vmin && (!best || *best < *vmin)) best = vmin;
    }
  }
  return best;
}

bool is_irreducible(const TropMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("is_irreducible needs a square matrix");
  }
  std::size_t ncomp = 0;
  scc_ids(a, ncomp);
  return ncomp == 1;
}

StarResult kleene_star(const TropMatrix& e) {
  if (!e.is_square()) {
    throw std::invalid_argument("kleene_star needs a square matrix");
  }
  const std::optional<Rational> rho = spectral_radius(e);
  if (rho && Rational(0, 1) < *rho) return StarResult{std::nullopt};

  const std::size_t n = e.rows();
  // (I (+) E)^k = I (+) E (+) ... (+) E^k, and powers past n-1 add nothing
  // once rho <= 0, so squaring up to exponent >= n-1 yields E* exactly.
  TropMatrix p = oplus(TropMatrix::identity(n), e);
  for (std::size_t exponent = 1; exponent < n - 1; exponent *= 2) {
    p = mat_mul(p, p);
  }
  return StarResult{p};
}

std::int64_t hilbert_seminorm(const Vec& x) {
  if (x.empty()) throw std::invalid_argument("empty vector");
  std::int64_t lo = 0, hi = 0;
  bool first = true;
  for (Scalar s : x) {
    if (!s.is_finite()) {
      throw std::domain_error("hilbert_seminorm needs finite entries");
    }
    if (first) {
      lo = hi = s.value();
      first = false;
    } else {
      lo = std::min(lo, s.value());
      hi = std::max(hi, s.value());
    }
  }
  return hi - lo;
}

std::int64_t delta_hilbert(const TropMatrix& k) {
  std::int64_t d = 0;
  for (std::size_t j = 0; j < k.cols(); ++j)
    d = std::max(d, hilbert_seminorm(k.col(j)));
  return d;
}

bool is_invertible(const TropMatrix& p) {
  if (!p.is_square()) return false;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    std::size_t finite_in_row = 0, finite_in_col = 0;
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (p.at(i, j).is_finite()) ++finite_in_row;
      if (p.at(j, i).is_finite()) ++finite_in_col;
      if (p.at(i, j).is_pos_inf() || p.at(j, i).is_pos_inf()) return false;
    }
    if (finite_in_row != 1 || finite_in_col != 1) return false;
  }
  return true;
}

}  // namespace tropctl
