#include "tropctl/scalar.hpp"

#include <charconv>
#include <stdexcept>

namespace tropctl {

Scalar Scalar::finite(rep value) {
  if (value == kNegInf || value == kPosInf) {
    throw std::overflow_error("scalar magnitude exceeds the finite range");
  }
  return Scalar(value);
}

Scalar::rep Scalar::value() const {
  if (!is_finite()) {
    throw std::domain_error("value() called on an infinite scalar");
  }
  return v_;
}

Scalar trop_add(Scalar a, Scalar b, Mode mode) {
  return mode == Mode::max ? (a < b ? b : a) : (b < a ? b : a);
}

Scalar trop_mul(Scalar a, Scalar b, Mode mode) {
  if (mode == Mode::max) {
    if (a.is_neg_inf() || b.is_neg_inf()) return Scalar::neg_inf();
    if (a.is_pos_inf() || b.is_pos_inf()) return Scalar::pos_inf();
  } else {
    if (a.is_pos_inf() || b.is_pos_inf()) return Scalar::pos_inf();
    if (a.is_neg_inf() || b.is_neg_inf()) return Scalar::neg_inf();
  }
  Scalar::rep sum;
  if (__builtin_add_overflow(a.value(), b.value(), &sum)) {
    throw std::overflow_error("tropical product overflows 64-bit");
  }
  return Scalar::finite(sum);
}

Scalar neg(Scalar a) {
  if (a.is_neg_inf()) return Scalar::pos_inf();
  if (a.is_pos_inf()) return Scalar::neg_inf();
  return Scalar::finite(-a.value());
}

std::string to_string(Scalar a) {
  if (a.is_neg_inf()) return "-inf";
  if (a.is_pos_inf()) return "+inf";
  return std::to_string(a.value());
}

Scalar parse_scalar(const std::string& token) {
  if (token == "-inf") return Scalar::neg_inf();
  if (token == "+inf") return Scalar::pos_inf();
  Scalar::rep v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("bad scalar token '" + token + "'");
  }
  return Scalar::finite(v);
}

}  // namespace tropctl
