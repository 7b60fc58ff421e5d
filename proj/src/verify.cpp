#include "fuzzy/verify.h"

#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "fuzzy/basis.h"
#include "fuzzy/error.h"
#include "fuzzy/matrep.h"
#include "fuzzy/rewrite.h"
#include "fuzzy/sexpr.h"
#include "fuzzy/sphere.h"

namespace fuzzy {

namespace {

struct Checker {
  SuiteResult& r;
  void operator()(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) r.failures.push_back(what);
  }
};

std::string label(int n, int m) { return "T(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

void orthogonality(Checker& check, int nmax, std::uint64_t) {
  for (int n1 = 0; n1 <= nmax; ++n1)
    for (int m1 = -n1; m1 <= n1; ++m1)
      for (int n2 = 0; n2 <= nmax; ++n2)
        for (int m2 = -n2; m2 <= n2; ++m2) {
          const ParamPoly v = inner(build_T(n1, m1), build_T(n2, m2));
          if (n1 == n2 && m1 == m2)
            check(v == norm_T(n1, m1), "norm of " + label(n1, m1));
          else
            check(v.is_zero(), "<" + label(n1, m1) + "," + label(n2, m2) + "> != 0");
        }
}

void norms(Checker& check, int nmax, std::uint64_t) {
  for (int n = 0; n <= nmax; ++n) {
    check(nu_via_trace(n) == nu_n(n), "trace route for nu_" + std::to_string(n));
    check(pi0(nf_mul(NormalForm::jm(n), NormalForm::jp(n))) == nu_n(n), "pi0 route for nu_" + std::to_string(n));
  }
}

void spectra(Checker& check, int nmax, std::uint64_t) {
  for (int n = 0; n <= nmax; ++n)
    for (int m = -n; m <= n; ++m) {
      const NormalForm& t = build_T(n, m);
      check(apply_operator(Operator::Ez, t) == t.scaled(ParamPoly::kappa().scaled(m)), "e_z on " + label(n, m));
      check(apply_operator(Operator::Laplacian, t) == t.scaled(ParamPoly::kappa(2).scaled(n * (n + 1))),
            "Laplacian on " + label(n, m));
      const NormalForm up = m < n ? build_T(n, m + 1).scaled(ParamPoly::kappa(2).scaled((n - m) * (n + m + 1))) : NormalForm();
      const NormalForm down = m > -n ? build_T(n, m - 1) : NormalForm();
      check(apply_operator(Operator::Eplus, t) == up, "e+ on " + label(n, m));
      check(apply_operator(Operator::Eminus, t) == down, "e- on " + label(n, m));
    }
}

void representation(Checker& check, int nmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int N = 1; N <= nmax + 1; ++N) {
    for (int n = 0; n <= nmax; ++n)
      for (int m = -n; m <= n; ++m)
        check(phi_N(build_T(n, m), N).is_zero() == (n >= N), "kernel of phi_" + std::to_string(N) + " at " + label(n, m));
    for (int t = 0; t < 4; ++t) {
      const NormalForm f = evaluate_words(random_dense_input(3, rng(), 3));
      const NormalForm g = evaluate_words(random_dense_input(2, rng(), 3));
      check(phi_N(nf_mul(f, g), N) == phi_N(f, N) * phi_N(g, N), "homomorphism at N=" + std::to_string(N));
      check(pi0_trace(f, N) == pi0(f).eval(1, rep_u(N)), "pi0 trace at N=" + std::to_string(N));
    }
  }
}

void fast(Checker& check, int nmax, std::uint64_t seed) {
  for (int d = 1; d <= nmax; ++d) {
    const FreeElement f = random_dense_input(d, seed + static_cast<std::uint64_t>(d));
    check(decompose_fast(f) == decompose(normalize(f)), "decompose_fast at degree " + std::to_string(d));
  }
}

void limit(Checker& check, int nmax, std::uint64_t) {
  const Grid g = Grid::make(33, 64);
  for (int n = 0; n <= nmax; ++n)
    for (int m = -n; m <= n; ++m) {
      const SphereFunction F = normalized_basis_limit(n, m, 1.0);
      double worst = 0;
      for (double t : g.theta)
        for (double p : g.phi) worst = std::max(worst, std::abs(F.eval_jform(t, p) - (n % 2 ? -1.0 : 1.0) * ylm(n, -m, t, p)));
      check(worst < 1e-10, "limit of " + label(n, m));
    }
}

void moyal(Checker& check, int nmax, std::uint64_t) {
  std::vector<NormalForm> pool;
  for (int n = 0; n <= nmax; ++n)
    for (int m = -n; m <= n; ++m) pool.push_back(build_T(n, m).scaled(ParamPoly::kappa(m - n)));
  for (const auto& f : pool)
    for (const auto& h : pool) {
      const SphereFunction lhs = moyal_limit(f, h, 1.0);
      check(*lhs.jform == poisson(*to_sphere(decompose(f), 1.0).jform, *to_sphere(decompose(h), 1.0).jform),
            "moyal limit equals poisson bracket");
    }
}

void appendix(Checker& check, int nmax, std::uint64_t) {
  for (int a = 0; a <= nmax; ++a)
    for (int b = 0; a + b <= nmax; ++b)
      for (int c = 0; a + b + c <= nmax; ++c)
        for (int m = 0; m <= a + b + c; ++m) check(split_check(a, b, c, m), "split identity");
  for (int n = 0; n <= nmax; ++n) {
    check(formal_trace(basis_sexpr(n, n)).is_zero(), "trace of the form of " + label(n, n));
    check(sexpr_to_nf(basis_sexpr(n, n)) == build_T(n, n), "form of " + label(n, n));
  }
}

void ideal(Checker& check, int nmax, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 10 * (nmax + 1); ++t) {
    const NormalForm g = evaluate_words(random_dense_input(1 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, nmax))), rng(), 2));
    check(left_ideal_z_member(nf_mul(g, NormalForm::z())), "g*z is a member");
    check(!left_ideal_z_member(nf_mul(g, NormalForm::z()) + ParamPoly(1)), "g*z + 1 is not a member");
  }
}

const std::map<std::string, std::function<void(Checker&, int, std::uint64_t)>>& suites() {
  static const std::map<std::string, std::function<void(Checker&, int, std::uint64_t)>> table{
      {"appendix", appendix}, {"fast", fast},     {"ideal", ideal},   {"limit", limit},
      {"moyal", moyal},       {"norms", norms},   {"orthogonality", orthogonality},
      {"representation", representation},        {"spectra", spectra},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, int nmax, std::uint64_t seed) {
  auto it = suites().find(name);
  if (it == suites().end()) throw Error("UsageError", "unknown suite '" + name + "'");
  if (nmax < 0) throw Error("UsageError", "nmax must be non-negative");
  SuiteResult r;
  r.name = name;
  Checker check{r};
  it->second(check, nmax, seed);
  return r;
}

}  // namespace fuzzy
