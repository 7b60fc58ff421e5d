#include <cmath>

#include "doctest.h"
#include "fuzzy/basis.h"
#include "fuzzy/error.h"
#include "fuzzy/rewrite.h"
#include "fuzzy/sphere.h"
#include "printers.h"

using namespace fuzzy;

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex I(0, 1);

NormalForm nf(const std::string& text) { return normalize(to_ladder(parse(text))); }

SphereFunction exact(const JForm& j, double R = 1.5) { return from_jform(j, R); }

double max_diff(const SphereFunction& F, const SphereFunction& G, const Grid& g) {
  double worst = 0;
  for (double t : g.theta)
    for (double p : g.phi) worst = std::max(worst, std::abs(F.eval(t, p) - G.eval(t, p)));
  return worst;
}

double harmonics_diff(const std::map<Mode, Complex>& a, const std::map<Mode, Complex>& b) {
  double worst = 0;
  for (const auto& [k, v] : a) worst = std::max(worst, std::abs(v - (b.count(k) ? b.at(k) : Complex(0))));
  for (const auto& [k, v] : b) worst = std::max(worst, std::abs(v - (a.count(k) ? a.at(k) : Complex(0))));
  return worst;
}

}  // namespace

TEST_CASE("gauss legendre integrates polynomials") {
  std::vector<double> x, w;
  gauss_legendre(6, x, w);
  double s0 = 0, s10 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s0 += w[i];
    s10 += w[i] * std::pow(x[i], 10);
  }
  CHECK(s0 == doctest::Approx(2).epsilon(1e-14));
  CHECK(s10 == doctest::Approx(2.0 / 11).epsilon(1e-13));
}

TEST_CASE("harmonics are orthonormal under the averaged measure") {
  const Grid g = Grid::for_band(5);
  std::vector<SphereFunction> ys;
  std::vector<Mode> modes;
  for (int n = 0; n <= 5; ++n)
    for (int m = -n; m <= n; ++m) {
      SphereFunction Y;
      Y.harmonics[{n, m}] = 1;
      ys.push_back(Y);
      modes.push_back({n, m});
    }
  double worst = 0;
  for (std::size_t a = 0; a < ys.size(); ++a)
    for (std::size_t b = 0; b < ys.size(); ++b)
      worst = std::max(worst, std::abs(sphere_inner(ys[a], ys[b], g) - (a == b ? 1.0 : 0.0)));
  CHECK(worst < 1e-9);
  CHECK(std::abs(ylm(0, 0, 0.3, 1.1) - 1.0) < 1e-15);
  for (int n = 0; n <= 4; ++n)
    for (int m = -n; m <= n; ++m) {
      const double sign = (m % 2 == 0) ? 1 : -1;
      CHECK(std::abs(std::conj(ylm(n, m, 0.7, 2.1)) - sign * ylm(n, -m, 0.7, 2.1)) < 1e-12);
    }
}

TEST_CASE("generators map to coordinate functions") {
  const double R = 1.3;
  const Grid g = Grid::make(9, 16);
  for (double t : g.theta)
    for (double p : g.phi) {
      CHECK(std::abs(JForm::z().eval(R, t, p) - R * std::cos(t)) < 1e-14);
      CHECK(std::abs(JForm::x().eval(R, t, p) - R * std::sin(p) * std::sin(t)) < 1e-14);
      CHECK(std::abs(JForm::y().eval(R, t, p) - R * std::cos(p) * std::sin(t)) < 1e-14);
      CHECK(std::abs(JForm::jp().eval(R, t, p) - I * std::exp(-I * p) * R * std::sin(t)) < 1e-14);
    }
  const SphereFunction z = to_sphere(decompose(NormalForm::z()), R);
  const SphereFunction jp = to_sphere(decompose(NormalForm::jp()), R);
  for (double t : g.theta)
    for (double p : g.phi) {
      CHECK(std::abs(z.eval_jform(t, p) - R * std::cos(t)) < 1e-13);
      CHECK(std::abs(z.eval_harmonics(t, p) - R * std::cos(t)) < 1e-13);
      CHECK(std::abs(jp.eval_harmonics(t, p) - I * std::exp(-I * p) * R * std::sin(t)) < 1e-13);
    }
  CHECK(std::abs(sphere_inner(z, z) - R * R / 3) < 1e-13);
}

TEST_CASE("jform product matches pointwise product") {
  const JForm a = JForm::jp() * JForm::jp() + JForm::z();
  const JForm b = JForm::jm() * JForm::z() + JForm::x();
  const JForm ab = a * b;
  for (double t : {0.2, 1.0, 2.5})
    for (double p : {0.0, 0.9, 4.0})
      CHECK(std::abs(ab.eval(1.7, t, p) - a.eval(1.7, t, p) * b.eval(1.7, t, p)) < 1e-12);
  const JForm r2 = JForm::x() * JForm::x() + JForm::y() * JForm::y() + JForm::z() * JForm::z();
  CHECK(r2 == JForm::constant(ParamPoly::u()));
}

TEST_CASE("normalized basis limits are harmonics") {
  const Grid g = Grid::make(33, 64);
  const double R = 1.25;
  double worst = 0, worst_h = 0;
  for (int n = 0; n <= 6; ++n)
    for (int m = -n; m <= n; ++m) {
      const SphereFunction F = normalized_basis_limit(n, m, R);
      const double sign = n % 2 == 0 ? 1 : -1;
      for (double t : g.theta)
        for (double p : g.phi) {
          worst = std::max(worst, std::abs(F.eval_jform(t, p) - sign * ylm(n, -m, t, p)));
          worst_h = std::max(worst_h, std::abs(F.eval_harmonics(t, p) - sign * ylm(n, -m, t, p)));
        }
    }
  CHECK(worst < 1e-10);
  CHECK(worst_h < 1e-10);
}

TEST_CASE("divergent limits are reported") {
  BasisDecomp d;
  d.add({1, 1}, ParamPoly::kappa(-1));
  CHECK_THROWS_WITH_AS(to_sphere(d, 1.0), doctest::Contains("pole"), Error);
}

TEST_CASE("poisson bracket of coordinates") {
  const JForm x = JForm::x(), y = JForm::y(), z = JForm::z();
  CHECK(poisson(x, y) == z);
  CHECK(poisson(y, z) == x);
  CHECK(poisson(z, x) == y);
  CHECK(poisson(JForm::jp(), z) == JForm::jp().scaled(ParamPoly(GaussRational(0, 1))));
  CHECK(poisson(JForm::jp(), JForm::jm()) == z.scaled(ParamPoly(GaussRational(0, -2))));
  const JForm f = basis_jform(3, 1) + JForm::jp() * z;
  const JForm g = basis_jform(2, -2) + JForm::x() * JForm::y();
  const JForm h = basis_jform(2, 1) + JForm::z() * z;
  CHECK(poisson(f, g) == poisson(g, f).scaled(ParamPoly(-1)));
  CHECK(poisson(f, g * h) == poisson(f, g) * h + g * poisson(f, h));
  const JForm jac = poisson(f, poisson(g, h)) + poisson(g, poisson(h, f)) + poisson(h, poisson(f, g));
  CHECK(jac.is_zero());
  // {z, F} = d_phi F
  const SphereFunction F = exact(f);
  const SphereFunction dF = exact(poisson(z, f));
  const double e = 1e-6;
  for (double t : {0.4, 1.9})
    for (double p : {0.3, 2.2}) {
      const Complex fd = (F.eval(t, p + e) - F.eval(t, p - e)) / (2 * e);
      CHECK(std::abs(dF.eval(t, p) - fd) < 1e-6);
    }
  CHECK_THROWS_WITH_AS(poisson(SphereFunction{}, F), doctest::Contains("exact"), Error);
}

TEST_CASE("commutators tend to the poisson bracket") {
  const double R = 1.1;
  const SphereFunction xy = moyal_limit(nf("x"), nf("y"), R);
  CHECK(*xy.jform == JForm::z());
  const SphereFunction pm = moyal_limit(NormalForm::jp(), NormalForm::jm(), R);
  CHECK(*pm.jform == JForm::z().scaled(ParamPoly(GaussRational(0, -2))));
  std::vector<NormalForm> pool{nf("x"), nf("y"), nf("z")};
  for (int n = 0; n <= 3; ++n)
    for (int m = -n; m <= n; ++m) pool.push_back(build_T(n, m).scaled(ParamPoly::kappa(m - n)));
  const Grid g = Grid::make(9, 18);
  for (const auto& f : pool)
    for (const auto& h : pool) {
      const SphereFunction lhs = moyal_limit(f, h, R);
      const JForm rhs = poisson(*to_sphere(decompose(f), R).jform, *to_sphere(decompose(h), R).jform);
      CHECK(*lhs.jform == rhs);
      CHECK(max_diff(lhs, exact(rhs, R), g) < 1e-12);
    }
  CHECK_THROWS_WITH_AS(moyal_limit(NormalForm::jp().scaled(ParamPoly::kappa(-1)), NormalForm::jm(), R), doctest::Contains("kappa"), Error);
}

TEST_CASE("vector fields agree on both routes") {
  const double R = 0.9;
  const Operator ops[] = {Operator::Ex, Operator::Ey, Operator::Ez, Operator::Eplus, Operator::Eminus, Operator::Laplacian};
  for (int n = 0; n <= 4; ++n)
    for (int m = -n; m <= n; ++m) {
      const SphereFunction F = normalized_basis_limit(n, m, R);
      for (Operator op : ops) {
        const SphereFunction viaPoisson = vector_field(op, F);
        const auto viaLadder = vector_field_harmonics(op, F.harmonics);
        CHECK(harmonics_diff(viaPoisson.harmonics, viaLadder) < 1e-10);
      }
      const SphereFunction lap = vector_field(Operator::Laplacian, F);
      CHECK(*lap.jform == F.jform->scaled(ParamPoly(-n * (n + 1))));
    }
  const SphereFunction y = exact(JForm::y(), R);
  CHECK(*vector_field(Operator::Ex, y).jform == JForm::z());
  SphereFunction harmonic_only;
  harmonic_only.harmonics[{2, 1}] = 1;
  CHECK(vector_field(Operator::Ez, harmonic_only).harmonics.at({2, 1}) == I);
}

TEST_CASE("euler relation") {
  for (const JForm& f : {basis_jform(3, 2), basis_jform(4, -1) * JForm::z(), JForm::x() * JForm::y()}) {
    const JForm e = JForm::x() * poisson(JForm::x(), f) + JForm::y() * poisson(JForm::y(), f) +
                    JForm::z() * poisson(JForm::z(), f);
    CHECK(e.is_zero());
  }
}

TEST_CASE("grid dump rows") {
  const std::string out = grid_dump(exact(JForm::z(), 2.0), Grid::make(2, 3));
  CHECK(std::count(out.begin(), out.end(), '\n') == 6);
  double t, p, re, im;
  REQUIRE(std::sscanf(out.c_str(), "%lf %lf %lf %lf", &t, &p, &re, &im) == 4);
  CHECK(re == doctest::Approx(2 * std::cos(t)));
  CHECK(im == doctest::Approx(0));
  (void)kPi;
}
