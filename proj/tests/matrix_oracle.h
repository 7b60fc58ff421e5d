#pragma once

// Independent finite-dimensional check: the N-dimensional irreducible
// representation scaled to a rational kappa, written straight from the
// commutation relations and used to evaluate words without any rewriting.

#include <vector>

#include "fuzzy/free_element.h"
#include "fuzzy/normal_form.h"

namespace fuzzy::testing {

struct DenseMatrix {
  int n = 0;
  std::vector<GaussRational> a;

  explicit DenseMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim * dim)) {}
  static DenseMatrix identity(int dim) {
    DenseMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = GaussRational(1);
    return m;
  }
  GaussRational& at(int r, int c) { return a[static_cast<std::size_t>(r * n + c)]; }
  const GaussRational& at(int r, int c) const { return a[static_cast<std::size_t>(r * n + c)]; }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    DenseMatrix out(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (int j = 0; j < x.n; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return out;
  }
  DenseMatrix& operator+=(const DenseMatrix& o) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
  }
  DenseMatrix scaled(const GaussRational& c) const {
    DenseMatrix out = *this;
    for (auto& v : out.a) v *= c;
    return out;
  }
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

class Representation {
 public:
  Representation(int dim, Rational kappa)
      : dim_(dim), kappa_(kappa), u_(kappa * kappa * frac(dim * dim - 1, 4)),
        jp_(dim), jm_(dim), z_(dim) {
    // J+ v_r = k (r+1) v_{r+1},  J- v_r = k (N-r) v_{r-1},  z v_r = k (r - (N-1)/2) v_r
    for (int r = 0; r < dim; ++r) {
      if (r + 1 < dim) jp_.at(r + 1, r) = GaussRational(kappa * (r + 1));
      if (r > 0) jm_.at(r - 1, r) = GaussRational(kappa * (dim - r));
      z_.at(r, r) = GaussRational(kappa * (Rational(r) - frac(dim - 1, 2)));
    }
  }

  const Rational& u() const { return u_; }

  DenseMatrix letter(char c) const {
    const GaussRational half(frac(1, 2));
    switch (c) {
      case 'p': return jp_;
      case 'm': return jm_;
      case 'z': return z_;
      case 'x': { DenseMatrix m = jp_; m += jm_; return m.scaled(half); }
      case 'y': { DenseMatrix m = jp_; m += jm_.scaled(GaussRational(-1)); return m.scaled(GaussRational(0, frac(-1, 2))); }
    }
    return DenseMatrix(dim_);
  }

  GaussRational scalar(const ParamPoly& p) const { return p.eval(kappa_, u_); }

  DenseMatrix word(const Word& w) const {
    DenseMatrix m = DenseMatrix::identity(dim_);
    for (char c : w) m = m * letter(c);
    return m;
  }

  DenseMatrix eval(const FreeElement& f) const {
    DenseMatrix out(dim_);
    for (const auto& [w, c] : f.terms()) out += word(w).scaled(scalar(c));
    return out;
  }

  DenseMatrix eval(const NormalForm& f) const {
    DenseMatrix out(dim_);
    for (const auto& [e, c] : f.terms()) {
      Word w = Word(static_cast<std::size_t>(e.a), 'p') + Word(static_cast<std::size_t>(e.b), 'z') +
               Word(static_cast<std::size_t>(e.c), 'm');
      out += word(w).scaled(scalar(c));
    }
    return out;
  }

 private:
  int dim_;
  Rational kappa_;
  Rational u_;
  DenseMatrix jp_, jm_, z_;
};

}  // namespace fuzzy::testing
