#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fuzzy/free_element.h"
#include "fuzzy/param_poly.h"

namespace fuzzy {

/// Dense polynomial in z with ParamPoly coefficients; coeffs[b] multiplies z^b.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(const ParamPoly& constant);  // NOLINT
  static ZPoly z() { return ZPoly(std::vector<ParamPoly>{ParamPoly(0), ParamPoly(1)}); }
  explicit ZPoly(std::vector<ParamPoly> coeffs);

  const std::vector<ParamPoly>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const ParamPoly& coeff(int b) const;
  const ParamPoly& leading() const { return coeffs_.back(); }

  void add_term(int b, const ParamPoly& c);

  /// p(z) -> p(z + shift)
  ZPoly shifted(const ParamPoly& shift) const;
  /// p(z) -> p(z + j*kappa)
  ZPoly shifted_kappa(int j) const;
  ParamPoly eval(const ParamPoly& at) const;
  ZPoly derivative() const;
  ZPoly scaled(const ParamPoly& c) const;
  ZPoly conj() const;
  ZPoly map_coeffs(const std::function<ParamPoly(const ParamPoly&)>& fn) const;

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly operator-() const { return scaled(ParamPoly(-1)); }
  friend bool operator==(const ZPoly&, const ZPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<ParamPoly> coeffs_;
};

ZPoly pow(const ZPoly& base, unsigned exponent);

/// PBW exponent triple (a, b, c) of J+^a z^b J-^c.
struct Pbw {
  int a = 0;
  int b = 0;
  int c = 0;
  auto operator<=>(const Pbw&) const = default;
};

/// Canonical element of the quotient algebra. Every monomial is J+^a z^b
/// (a >= 0) or z^b J-^c (c > 0); never both ladder letters at once. The
/// element is stored per e_z-sector m = a - c as a polynomial in z:
/// sector m >= 0 means J+^m p(z), sector m < 0 means p(z) J-^{-m}.
class NormalForm {
 public:
  using Sectors = std::map<int, ZPoly>;

  NormalForm() = default;
  NormalForm(const ParamPoly& scalar);  // NOLINT
  explicit NormalForm(Sectors sectors);

  static NormalForm jp(int power = 1);
  static NormalForm jm(int power = 1);
  static NormalForm z(int power = 1);
  static NormalForm sector(int m, const ZPoly& p);
  static NormalForm monomial(const Pbw& e, const ParamPoly& coeff);

  const Sectors& sectors() const { return sectors_; }
  const ZPoly& sector_poly(int m) const;
  bool is_zero() const { return sectors_.empty(); }

  /// The (a, b, c) -> coefficient view.
  std::map<Pbw, ParamPoly> terms() const;
  /// Largest a + b + c over the stored monomials (-1 for zero).
  int degree() const;
  /// Polynomial of sector m in J-notation: J+^m q(z) or J-^{-m} q(z).
  ZPoly j_poly(int m) const;

  NormalForm& operator+=(const NormalForm& o);
  NormalForm& operator-=(const NormalForm& o);
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  NormalForm operator-() const { return scaled(ParamPoly(-1)); }
  NormalForm scaled(const ParamPoly& c) const;
  NormalForm map_coeffs(const std::function<ParamPoly(const ParamPoly&)>& fn) const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

  /// Readable expression that parses back to the same element.
  std::string to_string() const;

 private:
  void add_sector(int m, const ZPoly& p);
  Sectors sectors_;
};

/// Product in the quotient algebra, computed in closed form from the
/// reordering identities for z and J+-, and the Casimir products.
NormalForm nf_mul(const NormalForm& f, const NormalForm& g);
inline NormalForm operator*(const NormalForm& f, const NormalForm& g) { return nf_mul(f, g); }
NormalForm nf_pow(const NormalForm& f, unsigned exponent);
NormalForm commutator(const NormalForm& f, const NormalForm& g);

/// Hermitian conjugate: (J+^a z^b)^dagger = z^b J-^a with conjugated coefficient.
NormalForm dagger(const NormalForm& f);

/// J-^k J+^k = prod_{s<k} (u - (z + s k)(z + (s+1) k)) and
/// J+^k J-^k = prod_{s<k} (u - (z - s k)(z - (s+1) k)).
const ZPoly& jm_jp_product(int k);
const ZPoly& jp_jm_product(int k);

/// Word-by-word image of a free element in the quotient (fast path, no
/// rewriting). Cartesian words go through x = (J+ + J-)/2, y = (J+ - J-)/(2i).
NormalForm evaluate_words(const FreeElement& f);

/// Generators as normal forms.
NormalForm nf_x();
NormalForm nf_y();

/// Splits f into weight-homogeneous parts, w(J+-) = w(z) = w(kappa) = 1, w(u) = 2.
std::map<int, NormalForm> split_by_weight(const NormalForm& f);

}  // namespace fuzzy
