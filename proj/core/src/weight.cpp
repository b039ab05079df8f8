#include "crosskit/weight.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace crosskit {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string_int128(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 x = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
  char buf[48];
  int i = 0;
  while (x) {
    buf[i++] = char('0' + int(x % 10));
    x /= 10;
  }
  std::string s;
  if (neg) s.push_back('-');
  while (i) s.push_back(buf[--i]);
  return s;
}

std::string format_double(double v) {
  // shortest representation that round-trips
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

Weight::Weight(std::int64_t n, std::int64_t d) {
  require(d > 0, "weight denominator must be positive");
  require(n >= 0 && n <= d, "weight must lie in [0,1]");
  std::int64_t g = gcd64(n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

Weight Weight::parse(const std::string& text) {
  // accepts plain decimals: "1", "0", "0.25", ".5", "1.0"
  std::string s = text;
  if (s.empty()) throw parse_error("empty weight");
  std::size_t dot = s.find('.');
  std::string ip = dot == std::string::npos ? s : s.substr(0, dot);
  std::string fp = dot == std::string::npos ? "" : s.substr(dot + 1);
  if (ip.empty() && fp.empty()) throw parse_error("bad weight '" + text + "'");
  for (char c : ip)
    if (!std::isdigit((unsigned char)c)) throw parse_error("bad weight '" + text + "'");
  for (char c : fp)
    if (!std::isdigit((unsigned char)c)) throw parse_error("bad weight '" + text + "'");
  if (fp.size() > 9) throw parse_error("weight '" + text + "' has more than 9 decimals");
  std::int64_t whole = ip.empty() ? 0 : std::strtoll(ip.c_str(), nullptr, 10);
  std::int64_t den = 1;
  for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
  std::int64_t frac = fp.empty() ? 0 : std::strtoll(fp.c_str(), nullptr, 10);
  std::int64_t num = whole * den + frac;
  if (num > den) throw domain_error("weight '" + text + "' outside [0,1]");
  return Weight(num, den);
}

std::string Weight::decimal() const {
  if (den == 1) return std::to_string(num);
  // den divides a power of 10 by construction; expand and trim zeros
  std::int64_t d = den, pow10 = 1;
  int k = 0;
  while (d % 2 == 0) { d /= 2; ++k; }
  while (d % 5 == 0) { d /= 5; ++k; }
  if (d != 1) return std::to_string(num) + "/" + std::to_string(den);  // non-decimal rational
  std::int64_t scale = 1;
  for (int i = 0; i < k; ++i) scale *= 10;
  (void)pow10;
  std::int64_t scaled = num * (scale / den);
  std::string digits = std::to_string(scaled);
  while ((int)digits.size() <= k) digits.insert(digits.begin(), '0');
  std::string out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

ExactValue ExactValue::from_fraction(int128 n, int128 d) {
  ExactValue v;
  if (d < 0) { n = -n; d = -d; }
  int128 g = gcd128(n, d);
  if (g == 0) g = 1;
  v.num = n / g;
  v.den = d / g;
  v.exact = true;
  v.approx = double(v.num) / double(v.den);
  return v;
}

ExactValue ExactValue::from_double(double x) {
  ExactValue v;
  v.exact = false;
  v.approx = x;
  v.num = 0;
  v.den = 1;
  return v;
}

ExactValue ExactValue::plus(const ExactValue& o) const {
  if (!exact || !o.exact) return from_double(approx + o.approx);
  int128 g = gcd128(den, o.den);
  int128 d = den / g * o.den;
  int128 n = num * (o.den / g) + o.num * (den / g);
  ExactValue v = from_fraction(n, d);
  return v;
}

ExactValue ExactValue::times(const ExactValue& o) const {
  if (!exact || !o.exact) return from_double(approx * o.approx);
  int128 g1 = gcd128(num, o.den), g2 = gcd128(o.num, den);
  return from_fraction((num / g1) * (o.num / g2), (den / g2) * (o.den / g1));
}

ExactValue ExactValue::scaled(std::int64_t mn, std::int64_t md) const {
  if (!exact) return from_double(approx * double(mn) / double(md));
  return from_fraction(num * mn, den * md);
}

int ExactValue::compare(const ExactValue& o) const {
  if (exact && o.exact) {
    int128 l = num * o.den, r = o.num * den;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  double d = approx - o.approx;
  if (d < -1e-9) return -1;
  if (d > 1e-9) return 1;
  return 0;
}

std::string ExactValue::decimal_or_fraction() const {
  if (!exact) return format_double(approx);
  if (den == 1) return to_string_int128(num);
  return to_string_int128(num) + "/" + to_string_int128(den);
}

ExactValue weight_product(const Weight& a, const Weight& b) {
  return ExactValue::from_fraction(int128(a.num) * b.num, int128(a.den) * b.den);
}

}  // namespace crosskit
