#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tropctl/matrix.hpp"
#include "tropctl/semimodule.hpp"
#include "tropctl/twosided.hpp"

namespace tropctl::testing {

inline Scalar fin(std::int64_t v) { return Scalar::finite(v); }
inline Scalar ninf() { return Scalar::neg_inf(); }

inline Vec vec(std::initializer_list<std::int64_t> vals) {
  Vec v;
  for (std::int64_t x : vals) v.push_back(fin(x));
  return v;
}

// -999 stands for -inf in the shorthand tables below.
constexpr std::int64_t kEps = -999;

inline Scalar entry(std::int64_t v) { return v == kEps ? ninf() : fin(v); }

inline TropMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.begin()->size();
  TropMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (std::int64_t v : row) m.at(i, j++) = entry(v);
    ++i;
  }
  return m;
}

inline Vec vece(std::initializer_list<std::int64_t> vals) {
  Vec v;
  for (std::int64_t x : vals) v.push_back(entry(x));
  return v;
}

// Scalars in {-inf, lo..hi}, -inf with probability ~1/(range+2).
inline Scalar random_scalar(std::mt19937_64& rng, std::int64_t lo,
                            std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo - 1, hi);
  const std::int64_t v = dist(rng);
  return v < lo ? ninf() : fin(v);
}

inline Scalar random_finite(std::mt19937_64& rng, std::int64_t lo,
                            std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  return fin(dist(rng));
}

inline TropMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                                std::size_t cols, std::int64_t lo,
                                std::int64_t hi, bool allow_eps = true) {
  TropMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = allow_eps ? random_scalar(rng, lo, hi)
                             : random_finite(rng, lo, hi);
  return m;
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n, std::int64_t lo,
                      std::int64_t hi, bool allow_eps = true) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = allow_eps ? random_scalar(rng, lo, hi) : random_finite(rng, lo, hi);
  return v;
}

// All vectors with entries in {-inf, lo..hi}, dimension n.
inline std::vector<Vec> box(std::size_t n, std::int64_t lo, std::int64_t hi) {
  const std::int64_t side = hi - lo + 2;  // one slot for -inf
  std::vector<Vec> points;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(side);
  points.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t slot =
          static_cast<std::int64_t>(rest % static_cast<std::size_t>(side));
      rest /= static_cast<std::size_t>(side);
      v[i] = slot == 0 ? ninf() : fin(lo + slot - 1);
    }
    points.push_back(std::move(v));
  }
  return points;
}

inline bool solves(const TropMatrix& d, const TropMatrix& c, const Vec& x) {
  return mat_vec(d, x) == mat_vec(c, x);
}

inline bool solves_row(const Vec& a, const Vec& b, const Vec& x) {
  Scalar lhs = ninf(), rhs = ninf();
  for (std::size_t i = 0; i < x.size(); ++i) {
    lhs = trop_add(lhs, trop_mul(a[i], x[i]));
    rhs = trop_add(rhs, trop_mul(b[i], x[i]));
  }
  return lhs == rhs;
}

}  // namespace tropctl::testing
