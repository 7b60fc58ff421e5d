#pragma once

#include <map>
#include <string>

#include "fuzzy/free_element.h"
#include "fuzzy/normal_form.h"

namespace fuzzy {

/// Exponents of a totally symmetric word in x, y, z.
struct SIndex {
  int a = 0;
  int b = 0;
  int c = 0;
  int degree() const { return a + b + c; }
  auto operator<=>(const SIndex&) const = default;
};

/// Linear combination of Ssym(a, b, c), the sum of all distinct
/// arrangements of x^a y^b z^c (each with coefficient 1).
class SExpr {
 public:
  using Terms = std::map<SIndex, ParamPoly>;

  SExpr() = default;
  static SExpr ssym(int a, int b, int c, const ParamPoly& coeff = ParamPoly(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamPoly coeff(SIndex i) const;
  /// Adds c * Ssym(i); indices with a negative entry are the zero element.
  void add(SIndex i, const ParamPoly& c);

  SExpr& operator+=(const SExpr& o);
  SExpr& operator-=(const SExpr& o);
  friend SExpr operator+(SExpr a, const SExpr& b) { return a += b; }
  friend SExpr operator-(SExpr a, const SExpr& b) { return a -= b; }
  SExpr scaled(const ParamPoly& c) const;
  friend bool operator==(const SExpr&, const SExpr&) = default;

  /// Components by total degree.
  std::map<int, SExpr> by_degree() const;
  std::string to_string() const;

 private:
  Terms terms_;
};

/// All distinct arrangements of x^a y^b z^c as free words.
FreeElement ssym_expand(int a, int b, int c);
FreeElement sexpr_to_free(const SExpr& s);

/// Tr Ssym(a,b,c) = Ssym(a-2,b,c) + Ssym(a,b-2,c) + Ssym(a,b,c-2), extended linearly.
SExpr formal_trace(const SExpr& s);

/// Symmetrization of an element of the enveloping algebra (no Casimir
/// relation) given as free words in either alphabet.
SExpr free_to_sexpr(const FreeElement& f);

/// [axis, s] for axis in {'x','y','z'}, computed as a literal commutator in
/// the enveloping algebra and re-symmetrized.
SExpr ad_gen(char axis, const SExpr& s);
/// The closed index formula for the same commutator:
///   [x, Ssym(a,b,c)] = i k (c+1) Ssym(a,b-1,c+1) - i k (b+1) Ssym(a,b+1,c-1)
/// and its cyclic images for y and z.
SExpr ad_formula(char axis, const SExpr& s);

/// Checks Ssym(a,b,c) = sum_{d+e+f=m} Ssym(a-d,b-e,c-f) Ssym(d,e,f) in the free algebra.
bool split_check(int a, int b, int c, int m);

/// Trace-free symmetric form of T^m_n (homogeneous of degree n). Cached.
const SExpr& basis_sexpr(int n, int m);

/// The representative of f whose homogeneous components are all formally trace-free.
SExpr nf_to_sexpr(const NormalForm& f);
/// Image of s in the quotient algebra.
NormalForm sexpr_to_nf(const SExpr& s);

}  // namespace fuzzy
