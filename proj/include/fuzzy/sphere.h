#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fuzzy/basis.h"

namespace fuzzy {

using Complex = std::complex<double>;

/// Exact commutative function sum_m J^m p_m(z) on the sphere, where J = J+
/// for m >= 0 and J- for m < 0, J+ = i e^{-i phi} R sin(theta),
/// J- = -i e^{i phi} R sin(theta), z = R cos(theta), and the coefficients
/// of p_m are polynomials in u = R^2 (kappa-free).
class JForm {
 public:
  JForm() = default;
  static JForm constant(const ParamPoly& c);
  static JForm part(int m, const ZPoly& p);
  static JForm jp() { return part(1, ZPoly(ParamPoly(1))); }
  static JForm jm() { return part(-1, ZPoly(ParamPoly(1))); }
  static JForm z() { return part(0, ZPoly::z()); }
  static JForm x();
  static JForm y();

  const std::map<int, ZPoly>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  /// Largest |m| + deg p_m, a bound on the harmonic degree.
  int band_limit() const;

  JForm& operator+=(const JForm& o);
  JForm& operator-=(const JForm& o);
  friend JForm operator+(JForm a, const JForm& b) { return a += b; }
  friend JForm operator-(JForm a, const JForm& b) { return a -= b; }
  friend JForm operator*(const JForm& a, const JForm& b);
  JForm scaled(const ParamPoly& c) const;
  friend bool operator==(const JForm&, const JForm&) = default;

  Complex eval(double R, double theta, double phi) const;
  std::string to_string() const;

 private:
  void add_part(int m, const ZPoly& p);
  std::map<int, ZPoly> parts_;
};

/// Y^m_n(theta, phi) = i^m sqrt((2n+1)(n-m)!/(n+m)!) P^m_n(cos theta) e^{i m phi},
/// with Condon-Shortley Legendre functions. Orthonormal under the averaged
/// measure (1/4pi) sin(theta) dtheta dphi and conj(Y^m_n) = (-1)^m Y^{-m}_n.
/// The i^m phase matches the kappa -> 0 limit of the basis in the
/// coordinates x = R sin(phi) sin(theta), y = R cos(phi) sin(theta).
Complex ylm(int n, int m, double theta, double phi);

/// Tensor grid: Gauss-Legendre nodes in cos(theta) times uniform phi.
struct Grid {
  std::vector<double> theta;
  std::vector<double> theta_weight;  // sums to 2
  std::vector<double> phi;

  static Grid make(int n_theta, int n_phi);
  /// Smallest grid integrating products of two functions of harmonic degree <= n_max exactly.
  static Grid for_band(int n_max);
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// A function on the sphere of radius R: harmonic coefficients (against ylm)
/// and optionally an exact J-form times a numeric scale.
struct SphereFunction {
  double R = 1;
  std::map<Mode, Complex> harmonics;
  std::optional<JForm> jform;
  Complex jform_scale = 1;

  Complex eval(double theta, double phi) const;  // prefers the exact form
  Complex eval_harmonics(double theta, double phi) const;
  Complex eval_jform(double theta, double phi) const;  // throws MissingExactForm
  int band_limit() const;
};

/// Function with only an exact form; harmonics filled by quadrature projection.
SphereFunction from_jform(const JForm& j, double R, Complex scale = 1);

/// kappa -> 0 image of sum f_nm T^m_n. The limit of f_nm kappa^{n-m} must be
/// finite (DivergentLimit otherwise); harmonic (n,-m) then carries
/// (-1)^n lim(f_nm kappa^{n-m}) / (alpha_n(0) c_nm^{1/2}),
/// alpha_n(0) = sqrt((2n+1)!)/(n! (2R)^n), c_nm = (n+m)!/((2n)!(n-m)!).
SphereFunction to_sphere(const BasisDecomp& d, double R);
/// kappa -> 0 image of the normalized basis element P^m_n.
SphereFunction normalized_basis_limit(int n, int m, double R);
/// Exact kappa -> 0 form of kappa^{m-n} T^m_n.
const JForm& basis_jform(int n, int m);

/// (1/4pi) integral of conj(F) G over the unit sphere, on the given grid
/// (default: exact for the band limits involved).
Complex sphere_inner(const SphereFunction& F, const SphereFunction& G, std::optional<Grid> grid = std::nullopt);

/// Poisson bracket (1/(R sin theta))(d_phi f d_theta g - d_theta f d_phi g), exact on J-forms.
JForm poisson(const JForm& f, const JForm& g);
SphereFunction poisson(const SphereFunction& F, const SphereFunction& G);

/// lim (i kappa)^{-1} [f, g] through decomposition; NotDivisible if the
/// commutator is not O(kappa) in the normalized basis.
SphereFunction moyal_limit(const NormalForm& f, const NormalForm& g, double R);

/// Limits (i kappa)^{-1} e_a -> {a, .} for a in x, y, z, J+, J-, and
/// -kappa^{-2} Delta -> sum_a {a, {a, .}}.
SphereFunction vector_field(Operator op, const SphereFunction& F);
/// Same operators applied to the harmonic coefficients only.
std::map<Mode, Complex> vector_field_harmonics(Operator op, const std::map<Mode, Complex>& h);

/// Rows "theta phi Re Im" of F on the grid.
std::string grid_dump(const SphereFunction& F, const Grid& grid);

}  // namespace fuzzy
