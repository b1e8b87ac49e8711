#pragma once

#include <numeric>
#include <sstream>
#include <string>

#include "ssred/symbol.hpp"

namespace ssred {

// Exact rational arithmetic for the gap-ratio bookkeeping. Values stay
// tiny; long long is ample.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw error("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw error("rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }

  double approx() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    std::ostringstream o;
    o << num;
    if (den != 1) o << '/' << den;
    return o.str();
  }
};

}  // namespace ssred
