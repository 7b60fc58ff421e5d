#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzy/gauss_rational.h"

namespace fuzzy {

/// Exponent pair of a monomial k^kappa * u^u, where k stands for kappa and
/// u for R^2. kappa may be negative (Laurent), u never.
struct ParamExp {
  int kappa = 0;
  int u = 0;

  int weight() const { return kappa + 2 * u; }
  auto operator<=>(const ParamExp&) const = default;
};

/// Gaussian-rational polynomial in the formal parameters kappa and u = R^2.
/// No zero coefficient is ever stored.
class ParamPoly {
 public:
  using Terms = std::map<ParamExp, GaussRational>;

  ParamPoly() = default;
  ParamPoly(long c) : ParamPoly(GaussRational(c)) {}  // NOLINT
  ParamPoly(const GaussRational& c);                   // NOLINT
  ParamPoly(const Rational& c) : ParamPoly(GaussRational(c)) {}  // NOLINT

  static ParamPoly monomial(const GaussRational& c, int kappa_exp, int u_exp);
  static ParamPoly kappa(int exp = 1) { return monomial(1, exp, 0); }
  static ParamPoly u(int exp = 1) { return monomial(1, 0, exp); }
  static ParamPoly i() { return ParamPoly(GaussRational::i()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::optional<GaussRational> constant_value() const;
  GaussRational coeff(ParamExp e) const;

  int min_kappa_exp() const;  // 0 for the zero polynomial
  int max_u_exp() const;      // -1 for the zero polynomial
  bool is_laurent() const { return !terms_.empty() && min_kappa_exp() < 0; }

  /// Weight of the monomials when all share one weight; nullopt otherwise
  /// (and for the zero polynomial).
  std::optional<int> homogeneous_weight() const;
  std::map<int, ParamPoly> split_by_weight() const;

  ParamPoly conj() const;
  ParamPoly times_kappa(int exp) const;
  ParamPoly scaled(const GaussRational& c) const;

  /// Substitutes kappa = k0, u = u0 exactly. Throws DivisionByZero when
  /// k0 = 0 meets a negative kappa exponent.
  GaussRational eval(const Rational& k0, const Rational& u0) const;
  /// Substitutes kappa = k0 but keeps u symbolic.
  ParamPoly eval_kappa(const Rational& k0) const;
  /// The kappa -> 0 value as a polynomial in u. Throws DivergentLimit on
  /// negative kappa exponents.
  ParamPoly kappa_to_zero() const;

  /// Exact quotient by a divisor whose leading coefficient in u is a single
  /// kappa monomial. Throws NotDivisible when a remainder is left over.
  ParamPoly divide_exact(const ParamPoly& divisor) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly operator-() const;

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

  /// Textual form such as "1/12*k^-2 + 2/3*u" (k = kappa, u = R^2, i imaginary unit).
  std::string to_string() const;

  void add_term(ParamExp e, const GaussRational& c);

 private:
  Terms terms_;
};

ParamPoly pow(const ParamPoly& base, unsigned exponent);

/// Dense univariate polynomial in u over the Gaussian rationals.
struct UPoly {
  std::vector<GaussRational> coeffs;  // coeffs[e] multiplies u^e; trimmed

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  GaussRational eval(const GaussRational& x) const;
  void trim();
  friend bool operator==(const UPoly&, const UPoly&) = default;
};

/// Exact interpolation through (u, value) samples. Throws DuplicateNode for
/// repeated nodes, DegreeExceeded when the interpolant of all samples has
/// degree above degree_bound, and InsufficientSamples when fewer than
/// degree_bound + 1 samples are given.
UPoly poly_interpolate(const std::vector<std::pair<Rational, GaussRational>>& samples,
                       int degree_bound);

/// Restores kappa-dependence of a kappa = 1 specialization: c*u^e becomes
/// c * k^(total_weight - word_degree - 2e) * u^e.
ParamPoly weight_lift(const UPoly& q, int total_weight, int word_degree);

/// The polynomial with kappa fixed at 1, as a dense polynomial in u.
UPoly at_kappa_one(const ParamPoly& p);

}  // namespace fuzzy
