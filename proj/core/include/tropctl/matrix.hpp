#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropctl/rational.hpp"
#include "tropctl/scalar.hpp"

namespace tropctl {

using Vec = std::vector<Scalar>;

/// Dense rectangular matrix over the extended integers.  Carries no
/// semiring mode; the mode is a per-operation argument.
class TropMatrix {
 public:
  TropMatrix(std::size_t rows, std::size_t cols,
             Scalar fill = Scalar::neg_inf());

  static TropMatrix identity(std::size_t n);
  static TropMatrix eps(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Scalar at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_col(std::size_t j, const Vec& v);

  bool is_square() const { return rows_ == cols_; }
  bool all_finite() const;

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Entrywise (+).
TropMatrix oplus(const TropMatrix& a, const TropMatrix& b,
                 Mode mode = Mode::max);

/// Tropical product; throws on inner-dimension mismatch.
TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b,
                   Mode mode = Mode::max);
Vec mat_vec(const TropMatrix& a, const Vec& x, Mode mode = Mode::max);
Vec row_mat(const Vec& x, const TropMatrix& a, Mode mode = Mode::max);

TropMatrix transpose(const TropMatrix& a);
TropMatrix scale(Scalar lambda, const TropMatrix& a, Mode mode = Mode::max);
Vec scale_vec(Scalar lambda, const Vec& x, Mode mode = Mode::max);
Vec oplus_vec(const Vec& a, const Vec& b, Mode mode = Mode::max);

/// Entrywise a <= b in the natural order (max mode).
bool entrywise_le(const TropMatrix& a, const TropMatrix& b);
bool entrywise_le(const Vec& a, const Vec& b);

/// Greatest solution of D (x) X <= C: (D\C)_saved entrywise as
/// min_i (C_ij - D_ik), evaluated with the completed-min conventions.
/// Entries may come out +inf (absent constraints).
TropMatrix left_residual(const TropMatrix& d, const TropMatrix& c);
/// C/D by transposition symmetry: greatest X with X (x) D <= C.
TropMatrix right_residual(const TropMatrix& c, const TropMatrix& d);
Vec residual_vec(const TropMatrix& q, const Vec& x);

/// Kleene star outcome.  Diverged means some node lies on or reaches a
/// positive-mean cycle; no +inf-filled matrix is ever fabricated.
struct StarResult {
  std::optional<TropMatrix> star;

  bool diverged() const { return !star.has_value(); }
};

/// I (+) E (+) ... (+) E^(n-1) via repeated squaring of (I (+) E) when the
/// spectral radius is <= 0; Diverged otherwise.
StarResult kleene_star(const TropMatrix& e);

/// Maximal circuit mean of the precedence graph as an exact rational;
/// nullopt when the graph is acyclic (the -inf case).
std::optional<Rational> spectral_radius(const TropMatrix& a);

/// True iff the precedence graph (arc i -> j when a_ji != -inf) is
/// strongly connected.  A 1x1 matrix counts as irreducible.
bool is_irreducible(const TropMatrix& a);

/// Additive Hilbert seminorm max_i x_i - min_i x_i; requires all entries
/// finite.
std::int64_t hilbert_seminorm(const Vec& x);
/// Max of the column seminorms; requires an all-finite matrix.
std::int64_t delta_hilbert(const TropMatrix& k);

/// Scaled permutation check: invertible max-plus matrices are exactly the
/// matrices with one finite entry in every row and every column.
bool is_invertible(const TropMatrix& p);

}  // namespace tropctl
