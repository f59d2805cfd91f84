#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace linkwidth {

// Reduced fraction with non-negative denominator. den == 0 encodes infinity
// (num fixed at 1), so every value has exactly one representation.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long n, long long d) {
    Rational r;
    if (d == 0) {
      r.num = 1;
      r.den = 0;
      return r;
    }
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    r.num = n / g;
    r.den = d / g;
    return r;
  }

  bool is_infinity() const { return den == 0; }

  std::string str() const {
    if (is_infinity()) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  // a < b by cross multiplication; infinity compares greater than everything.
  friend bool operator<(const Rational& a, const Rational& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
};

}  // namespace linkwidth
