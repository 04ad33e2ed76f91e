#pragma once

#include <cstdint>
#include <string>

namespace tropctl {

/// Exact fraction for circuit means.  Numerators are path weights and
/// denominators path lengths, so 64-bit components with 128-bit
/// cross-multiplication comparisons are always exact here.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  bool is_integer() const { return den == 1; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
};

std::string to_string(const Rational& r);

}  // namespace tropctl
