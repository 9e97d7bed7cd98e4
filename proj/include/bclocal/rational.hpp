#pragma once

/* Exact rational scalar on 64-bit words.  All intermediates go through
 * __int128 and are range-checked on the way back down; desk-scale inputs
 * never get near the limit, and anything that does throws Overflow rather
 * than wrapping. */

#include <cstdint>
#include <numeric>
#include <string>

#include "bclocal/errors.hpp"

namespace bclocal {

inline long long checked_narrow(__int128 v) {
  if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN)) fail(Errc::Overflow, "64-bit range exceeded");
  return (long long)v;
}

inline long long checked_add(long long a, long long b) { return checked_narrow(__int128(a) + b); }
inline long long checked_sub(long long a, long long b) { return checked_narrow(__int128(a) - b); }
inline long long checked_mul(long long a, long long b) { return checked_narrow(__int128(a) * b); }

struct Rational {
  long long num = 0;
  long long den = 1; // > 0, gcd(num, den) = 1

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) { assign(n, d); }

  void assign(__int128 n, __int128 d) {
    if (d == 0) fail(Errc::Overflow, "zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 an = n < 0 ? -n : n;
    __int128 g = gcd128(an, d);
    if (g > 1) { n /= g; d /= g; }
    num = checked_narrow(n);
    den = checked_narrow(d);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    r.assign(__int128(a.num) * b.den + __int128(b.num) * a.den, __int128(a.den) * b.den);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    r.assign(__int128(a.num) * b.den - __int128(b.num) * a.den, __int128(a.den) * b.den);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    r.assign(__int128(a.num) * b.num, __int128(a.den) * b.den);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) fail(Errc::Overflow, "division by zero");
    Rational r;
    r.assign(__int128(a.num) * b.den, __int128(a.den) * b.num);
    return r;
  }
  Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }
  Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
  Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
  Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
  Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return __int128(a.num) * b.den < __int128(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  bool is_zero() const { return num == 0; }
  Rational abs() const { return num < 0 ? -*this : *this; }
  double to_double() const { return double(num) / double(den); }

  // integer exponent, negative allowed for nonzero base
  Rational pow(long long e) const {
    if (e < 0) return (Rational(1) / *this).pow(-e);
    Rational acc(1), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base = (e >>= 1) ? base * base : base;
    }
    return acc;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

} // namespace bclocal
