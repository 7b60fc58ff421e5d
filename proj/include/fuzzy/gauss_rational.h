#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace fuzzy {

using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& text);

/// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}
std::string to_string(const Rational& q);

/// Exact complex number with rational real and imaginary parts.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT: implicit by design of literals
  GaussRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "3/4", "-i", "1/2*i", "(1+2*i)". Parenthesized only when both parts are nonzero.
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

GaussRational pow(const GaussRational& base, unsigned exponent);

}  // namespace fuzzy
