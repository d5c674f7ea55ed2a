#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gtrace {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional leading '-'); throws InputError otherwise
/// or when q == 0. The result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" with q > 0 and gcd(p, q) = 1. Integers keep the "/1".
std::string format_rational(const Rational& value);

std::strong_ordering compare(const Rational& a, const Rational& b);

/// Complex number with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(int real) : re(real), im(0) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const Rational& k, const GaussianRational& a) { return {k * a.re, k * a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string format_gaussian(const GaussianRational& z);

}  // namespace gtrace
