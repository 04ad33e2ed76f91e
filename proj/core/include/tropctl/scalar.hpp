#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace tropctl {

/// Semiring flavour for the idempotent addition and for the absorption
/// convention of the completed multiplication.
///
/// In max mode the additive neutral is -inf and -inf absorbs products
/// (so (-inf) (x) (+inf) = -inf).  In min mode the roles are swapped.
enum class Mode { max, min };

/// Which scalars a semimodule may use as coefficients.
///
/// `full`        — all of Z u {-inf} (the plain Zmax setting).
/// `nonpositive` — only scalars <= 0, i.e. the subsemiring that the
///                 order-dual encoding maps Nmin onto.  Generator sets in
///                 this domain keep their absolute height (no upward
///                 rescaling) and residuations clamp coefficients at 0.
enum class ScalarDomain { full, nonpositive };

/// Exact extended integer: Z u {-inf, +inf}.
///
/// Finite values are checked 64-bit; any overflow throws instead of
/// wrapping.  +inf only ever appears as the output of completed-semiring
/// operations (residuation); semimodule generators reject it.
class Scalar {
 public:
  using rep = std::int64_t;

  constexpr Scalar() : v_(kNegInf) {}

  static constexpr Scalar neg_inf() { return Scalar(kNegInf); }
  static constexpr Scalar pos_inf() { return Scalar(kPosInf); }
  static Scalar finite(rep value);

  constexpr bool is_neg_inf() const { return v_ == kNegInf; }
  constexpr bool is_pos_inf() const { return v_ == kPosInf; }
  constexpr bool is_finite() const { return !is_neg_inf() && !is_pos_inf(); }

  /// Value of a finite scalar; throws std::domain_error on +-inf.
  rep value() const;

  // The encoding (kNegInf < finite < kPosInf) makes the natural order of
  // Zmax coincide with the numeric order of the representation.
  friend constexpr bool operator==(Scalar a, Scalar b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(Scalar a, Scalar b) {
    return a.v_ <=> b.v_;
  }

 private:
  static constexpr rep kNegInf = std::numeric_limits<rep>::min();
  static constexpr rep kPosInf = std::numeric_limits<rep>::max();

  constexpr explicit Scalar(rep v) : v_(v) {}

  rep v_;
};

/// a (+) b: max or min of the two, with the mode's neutral element.
Scalar trop_add(Scalar a, Scalar b, Mode mode = Mode::max);

/// a (x) b: integer sum with the completed-semiring absorption rule for
/// mixed infinities ((-inf)+(+inf) = -inf in max mode, +inf in min mode).
Scalar trop_mul(Scalar a, Scalar b, Mode mode = Mode::max);

/// Negation; swaps the infinities.  This is the order-dual encoding used
/// to run Nmin data through the max-mode pipeline.
Scalar neg(Scalar a);

/// Serialization tokens: decimal integers, "-inf", "+inf".
std::string to_string(Scalar a);
Scalar parse_scalar(const std::string& token);

}  // namespace tropctl
