#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "crosskit/util.hpp"

namespace crosskit {

using int128 = __int128;

std::int64_t gcd64(std::int64_t a, std::int64_t b);
int128 gcd128(int128 a, int128 b);
std::string to_string_int128(int128 v);

// Edge weight as a reduced fraction in [0,1].  Weights parse from terminating
// decimals, so den always divides 10^9; exact paths rely on that.
struct Weight {
  std::int64_t num = 1;
  std::int64_t den = 1;

  Weight() = default;
  Weight(std::int64_t n, std::int64_t d);
  static Weight zero() { return Weight(0, 1); }
  static Weight one() { return Weight(1, 1); }
  static Weight parse(const std::string& text);  // decimal like "0.25", "1", ".5"

  double value() const { return double(num) / double(den); }
  bool is_zero() const { return num == 0; }
  std::string decimal() const;  // canonical shortest terminating decimal

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    return int128(a.num) * b.den < int128(b.num) * a.den;
  }
};

// Exact nonnegative rational with 128-bit terms; wide enough for any sum of
// weight products at the scales this library works at (num <= #pairs * 1e18).
struct ExactValue {
  int128 num = 0;
  int128 den = 1;
  bool exact = true;     // false once a double-only path contributed
  double approx = 0.0;   // always maintained

  static ExactValue from_fraction(int128 n, int128 d);
  static ExactValue from_double(double v);  // exact=false
  static ExactValue zero() { return from_fraction(0, 1); }

  ExactValue plus(const ExactValue& o) const;
  ExactValue times(const ExactValue& o) const;
  ExactValue scaled(std::int64_t mul_num, std::int64_t mul_den) const;
  int compare(const ExactValue& o) const;  // -1/0/1, exact when both exact
  std::string decimal_or_fraction() const;
};

ExactValue weight_product(const Weight& a, const Weight& b);

}  // namespace crosskit
