#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fuzzy/basis.h"
#include "fuzzy/free_element.h"
#include "fuzzy/normal_form.h"

namespace fuzzy {

/// N x N matrix stored by diagonals: diagonal s holds the entries at
/// (c + s, c). The representation matrices of e_z-eigenvectors occupy a
/// single diagonal, so products stay cheap.
class MatrixRep {
 public:
  explicit MatrixRep(int n = 1);
  static MatrixRep identity(int n);

  int dim() const { return n_; }
  GaussRational at(int row, int col) const;
  void add(int row, int col, const GaussRational& v);
  const std::map<int, std::vector<GaussRational>>& diagonals() const { return diags_; }

  MatrixRep& operator+=(const MatrixRep& o);
  MatrixRep& operator-=(const MatrixRep& o);
  friend MatrixRep operator+(MatrixRep a, const MatrixRep& b) { return a += b; }
  friend MatrixRep operator-(MatrixRep a, const MatrixRep& b) { return a -= b; }
  friend MatrixRep operator*(const MatrixRep& a, const MatrixRep& b);
  MatrixRep scaled(const GaussRational& c) const;

  GaussRational trace() const;
  bool is_zero() const;
  friend bool operator==(const MatrixRep& a, const MatrixRep& b);

  std::vector<std::vector<GaussRational>> dense() const;

 private:
  void prune();
  int n_;
  std::map<int, std::vector<GaussRational>> diags_;
};

/// u = (N^2 - 1)/4, the value tied to the N-dimensional representation at kappa = 1.
Rational rep_u(int N);

/// Generator images at kappa = 1 in the basis J+ v_r = (r+1) v_{r+1},
/// J- v_r = (N-r) v_{r-1}, z v_r = (r - (N-1)/2) v_r.
MatrixRep jp_matrix(int N);
MatrixRep jm_matrix(int N);
MatrixRep z_matrix(int N);

/// Image of a canonical element, coefficients specialized at kappa = 1, u = rep_u(N).
MatrixRep phi_N(const NormalForm& f, int N);
/// Image of free words (either alphabet), each word multiplied out directly.
MatrixRep phi_N(const FreeElement& f, int N);

/// (1/N) tr phi_N(f).
GaussRational pi0_trace(const NormalForm& f, int N);

/// nu_n recovered from traces of phi_N(J-^n J+^n) by interpolation in u.
ParamPoly nu_via_trace(int n);

/// Decomposition from finite representations: pairings with the basis
/// images at several N, interpolated in u and lifted back to kappa by the
/// weight grading. Same output as decompose.
BasisDecomp decompose_fast(const NormalForm& f);
BasisDecomp decompose_fast(const FreeElement& f);

struct BenchReport {
  int degree = 0;
  double fast_ms = 0;
  std::optional<double> direct_ms;
  std::optional<std::uint64_t> direct_rewrite_steps;
  std::optional<bool> agree;
  std::string to_json() const;
};

/// Seeded random dense input: `terms` words of exactly `degree` letters
/// over J+, J-, z with small rational coefficients.
FreeElement random_dense_input(int degree, std::uint64_t seed, int terms = 4);

/// Times both decomposition routes on `trials` seeded inputs. The direct
/// route (rewriting plus inner products) is skipped above direct_max_degree.
BenchReport bench_decompose(int degree, int trials, std::uint64_t seed, int direct_max_degree = 12);

}  // namespace fuzzy
