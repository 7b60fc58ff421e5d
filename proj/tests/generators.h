#pragma once

// Seeded random generators shared by the property tests.

#include <random>

#include "fuzzy/free_element.h"
#include "fuzzy/normal_form.h"
#include "fuzzy/param_poly.h"

namespace fuzzy::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational() {
    int num = integer(-9, 9);
    int den = integer(1, 5);
    return frac(num, den);
  }

  GaussRational gauss(bool allow_imag = true) {
    return allow_imag && coin() ? GaussRational(rational(), rational()) : GaussRational(rational());
  }

  // Polynomial in kappa and u with nonnegative exponents.
  ParamPoly param(int max_terms = 3, int max_exp = 2, bool allow_imag = true) {
    ParamPoly p;
    int n = integer(1, max_terms);
    for (int t = 0; t < n; ++t) p.add_term({integer(0, max_exp), integer(0, max_exp)}, gauss(allow_imag));
    return p;
  }

  Word word(int length, bool ladder) {
    static const char kLadder[] = {'p', 'm', 'z'};
    static const char kCart[] = {'x', 'y', 'z'};
    Word w;
    for (int i = 0; i < length; ++i) w += (ladder ? kLadder : kCart)[integer(0, 2)];
    return w;
  }

  FreeElement free_element(int max_degree, bool ladder, int terms = 4, bool rich_coeffs = true) {
    FreeElement f;
    for (int t = 0; t < terms; ++t) {
      f.add(word(integer(0, max_degree), ladder),
            rich_coeffs ? param(2, 1) : ParamPoly(GaussRational(rational())));
    }
    return f;
  }

  // Random canonical element with every monomial of generator degree <= max_degree.
  NormalForm normal_form(int max_degree, int terms = 5, bool rich_coeffs = true) {
    NormalForm f;
    for (int t = 0; t < terms; ++t) {
      int d = integer(0, max_degree);
      int m = integer(-d, d);
      int b = d - std::abs(m);
      Pbw e = m >= 0 ? Pbw{m, b, 0} : Pbw{0, b, -m};
      f += NormalForm::monomial(e, rich_coeffs ? param(2, 1) : ParamPoly(GaussRational(rational())));
    }
    return f;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fuzzy::testing
