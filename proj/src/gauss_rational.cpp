#include "fuzzy/gauss_rational.h"

#include "fuzzy/error.h"

namespace fuzzy {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error("SyntaxError", "not a rational: " + text);
  if (q.get_den() == 0) throw Error("DivisionByZero", "zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw Error("DivisionByZero", "division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational d = o.norm2();
  Rational re = (re_ * o.re_ + im_ * o.im_) / d;
  Rational im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) return fuzzy::to_string(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = fuzzy::to_string(im_) + "*i";
  }
  if (sgn(re_) == 0) return imag;
  std::string out = "(" + fuzzy::to_string(re_);
  if (imag[0] != '-') out += "+";
  return out + imag + ")";
}

GaussRational pow(const GaussRational& base, unsigned exponent) {
  GaussRational result(1);
  GaussRational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

}  // namespace fuzzy
