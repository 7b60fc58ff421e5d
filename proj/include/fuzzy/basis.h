#pragma once

#include <compare>
#include <map>
#include <string>

#include "fuzzy/normal_form.h"

namespace fuzzy {

/// Index (n, m) of the basis element T^m_n, |m| <= n.
struct Mode {
  int n = 0;
  int m = 0;
  auto operator<=>(const Mode&) const = default;
};

/// Coefficients of an element against the unnormalized basis
/// T^m_n = e-^{n-m}(J+^n), with e-(f) = [J-, f].
class BasisDecomp {
 public:
  using Terms = std::map<Mode, ParamPoly>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamPoly coeff(Mode mode) const;
  void add(Mode mode, const ParamPoly& c);

  BasisDecomp& operator+=(const BasisDecomp& o);
  BasisDecomp scaled(const ParamPoly& c) const;
  friend bool operator==(const BasisDecomp&, const BasisDecomp&) = default;

  /// Sum of coeff * T^m_n.
  NormalForm reconstruct() const;
  std::string to_string() const;

 private:
  Terms terms_;
};

/// T^m_n, built by n - m commutators with J- starting from J+^n. Cached.
const NormalForm& build_T(int n, int m);

/// nu_n = pi0(J-^n J+^n) = (n!)^2/(2n+1)! prod_{r=1}^n (4u + k^2 (1 - r^2)).
ParamPoly nu_n(int n);
/// <T^m_n, T^m_n> = k^{2(n-m)} (2n)! (n-m)!/(n+m)! nu_n, from the closed form.
ParamPoly norm_T(int n, int m);
/// <T^m_n, T^m_n> computed as inner(T, T). Cached.
const ParamPoly& computed_norm(int n, int m);

/// Sign of nu_n at kappa = k0, u = u0 read off from the integer
/// N0 = ceil(sqrt(4 u0/k0^2 + 1)): +1 below N0, then alternating, or 0 when
/// the square root is an integer. DomainError for u0 < 0.
int sigma_n(int n, const Rational& k0, const Rational& u0);

/// Projection onto the scalar component (the (0,0) coefficient).
ParamPoly pi0(const NormalForm& f);
/// pi0(f^dagger g).
ParamPoly inner(const NormalForm& f, const NormalForm& g);

/// Exact decomposition through inner products with the basis. Throws
/// DegenerateNorm if a needed norm vanishes.
BasisDecomp decompose(const NormalForm& f);

enum class Operator { Ex, Ey, Ez, Eplus, Eminus, Laplacian };
Operator parse_operator(const std::string& name);

/// Action of e_x, e_y, e_z, e+, e-, Delta on the T basis coefficients.
BasisDecomp apply_operator(Operator op, const BasisDecomp& d);
/// Same operators computed with commutators on a canonical element.
NormalForm apply_operator(Operator op, const NormalForm& f);

/// Univariate Hahn-type polynomial q with T^m_n proportional to J^m q(z)
/// (J+ for m >= 0, J- for m < 0, written with the ladder power on the left)
/// at kappa = 1, u = (N^2 - 1)/4. DomainError unless |m| <= n < N.
ZPoly hahn_p(int n, int m, int N);

struct OmegaResult {
  NormalForm value;     // coefficients are constants
  bool degenerate = false;  // sigma_p vanished; alpha_p was taken as 1
};

/// omega_p(f) = sum_m (P^m_p)^dagger f P^m_p with the normalized basis at
/// kappa = k0, u = u0. The square roots in P cancel pairwise.
OmegaResult omega_apply(int p, const NormalForm& f, const Rational& k0, const Rational& u0);

/// True iff f lies in the left ideal generated by z, i.e. each ladder-left
/// component polynomial has zero constant term.
bool left_ideal_z_member(const NormalForm& f);

}  // namespace fuzzy
