#include "fuzzy/cli.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "fuzzy/basis.h"
#include "fuzzy/error.h"
#include "fuzzy/matrep.h"
#include "fuzzy/rewrite.h"
#include "fuzzy/sphere.h"
#include "fuzzy/verify.h"
#include "json.hpp"

namespace fuzzy {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> exprs;
  std::string kappa;
  std::string u;
  int N = 0;
  int nmax = -1;
  std::uint64_t seed = 1;
  std::string suite;
  std::string grid;
  int trials = 1;
};

Rational pow_rational(const Rational& base, int exp) {
  if (exp < 0) {
    if (base == 0) throw Error("DivisionByZero", "negative power of kappa at kappa = 0");
    return 1 / pow_rational(base, -exp);
  }
  Rational r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Substitutes whichever of kappa and u were given on the command line.
ParamPoly specialize(const ParamPoly& p, const Options& o) {
  if (o.kappa.empty() && o.u.empty()) return p;
  const std::optional<Rational> k0 = o.kappa.empty() ? std::nullopt : std::optional(parse_rational(o.kappa));
  const std::optional<Rational> u0 = o.u.empty() ? std::nullopt : std::optional(parse_rational(o.u));
  ParamPoly out;
  for (const auto& [e, c] : p.terms()) {
    GaussRational v = c;
    if (k0) v *= GaussRational(pow_rational(*k0, e.kappa));
    if (u0) v *= GaussRational(pow_rational(*u0, e.u));
    out += ParamPoly::monomial(v, k0 ? 0 : e.kappa, u0 ? 0 : e.u);
  }
  return out;
}

NormalForm specialize(const NormalForm& f, const Options& o) {
  return f.map_coeffs([&](const ParamPoly& c) { return specialize(c, o); });
}

BasisDecomp specialize(const BasisDecomp& d, const Options& o) {
  BasisDecomp out;
  for (const auto& [mode, c] : d.terms()) out.add(mode, specialize(c, o));
  return out;
}

NormalForm read(const std::string& text) { return normalize(parse(text)); }

Json nf_json(const NormalForm& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"a", e.a}, {"b", e.b}, {"c", e.c}, {"coeff", c.to_string()}});
  return terms;
}

Json basis_json(const BasisDecomp& d) {
  Json terms = Json::array();
  for (const auto& [mode, c] : d.terms()) terms.push_back({{"n", mode.n}, {"m", mode.m}, {"coeff", c.to_string()}});
  return {{"basis", "T"}, {"terms", terms}};
}

Json harmonics_json(const SphereFunction& F) {
  Json terms = Json::array();
  for (const auto& [mode, c] : F.harmonics)
    terms.push_back({{"n", mode.n}, {"m", mode.m}, {"re", c.real()}, {"im", c.imag()}});
  return terms;
}

double radius(const Options& o) {
  if (o.u.empty()) return 1.0;
  const double u0 = parse_rational(o.u).get_d();
  if (!(u0 > 0)) throw Error("DomainError", "the sphere needs u > 0");
  return std::sqrt(u0);
}

std::optional<Grid> parse_grid(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used_a = 0, used_b = 0;
    const int a = std::stoi(text.substr(0, x), &used_a);
    const int b = std::stoi(text.substr(x + 1), &used_b);
    if (used_a != x || used_b != text.size() - x - 1 || a < 1 || b < 1) throw std::invalid_argument(text);
    return Grid::make(a, b);
  } catch (const std::logic_error&) {
    throw Error("UsageError", "--grid expects <int>x<int>, got '" + text + "'");
  }
}

Json run(const std::string& cmd, const Options& o, int& status) {
  const auto& e = o.exprs;
  if (cmd == "normalize") return {{"normal_form", nf_json(specialize(read(e.at(0)), o))}};
  if (cmd == "decompose") return basis_json(specialize(decompose(read(e.at(0))), o));
  if (cmd == "inner") return {{"inner", specialize(inner(read(e.at(0)), read(e.at(1))), o).to_string()}};
  if (cmd == "conjugate") return {{"normal_form", nf_json(specialize(dagger(read(e.at(0))), o))}};
  if (cmd == "apply") {
    const Operator op = parse_operator(e.at(0));
    return {{"operator", e.at(0)}, {"normal_form", nf_json(specialize(apply_operator(op, read(e.at(1))), o))}};
  }
  if (cmd == "matrix") {
    if (o.N < 1) throw Error("UsageError", "matrix needs --N >= 1");
    const MatrixRep m = phi_N(parse(e.at(0)), o.N);
    Json rows = Json::array();
    for (const auto& row : m.dense()) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(v.to_string());
      rows.push_back(r);
    }
    return {{"N", o.N}, {"kappa", "1"}, {"u", rep_u(o.N).get_str()}, {"matrix", rows}};
  }
  if (cmd == "moyal") {
    const SphereFunction F = moyal_limit(read(e.at(0)), read(e.at(1)), radius(o));
    return {{"R", F.R}, {"exact_form", F.jform->to_string()}, {"harmonics", harmonics_json(F)}};
  }
  if (cmd == "sphere-eval") {
    const SphereFunction F = to_sphere(decompose(read(e.at(0))), radius(o));
    Json out{{"R", F.R}, {"exact_form", F.jform->to_string()}, {"harmonics", harmonics_json(F)}};
    if (auto grid = parse_grid(o.grid)) out["grid"] = grid_dump(F, *grid);
    return out;
  }
  if (cmd == "verify") {
    const SuiteResult r = run_suite(o.suite, o.nmax < 0 ? 3 : o.nmax, o.seed);
    status = r.passed() ? 0 : 1;
    return {{"suite", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"passed", r.passed()}};
  }
  // bench
  const int top = o.nmax < 0 ? 8 : o.nmax;
  if (top < 1 || o.trials < 1) throw Error("UsageError", "bench needs --nmax >= 1 and --trials >= 1");
  Json reports = Json::array();
  for (int d = std::min(4, top); d <= top; d += 2)
    reports.push_back(Json::parse(bench_decompose(d, o.trials, o.seed).to_json()));
  return {{"reports", reports}};
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact kernel for the fuzzy sphere algebra", "fuzzysphere"};
  app.require_subcommand(1, 1);
  Options o;

  struct Entry {
    const char* name;
    const char* help;
    std::vector<const char*> positionals;
    bool params, N, sphere, suite, bench;
  };
  const std::vector<Entry> specs{
      {"normalize", "canonical normal form of an expression", {"expr"}, true, false, false, false, false},
      {"decompose", "coefficients against the T basis", {"expr"}, true, false, false, false, false},
      {"inner", "bilinear form <f, g> = pi0(f^dagger g)", {"f", "g"}, true, false, false, false, false},
      {"conjugate", "hermitian conjugate", {"expr"}, true, false, false, false, false},
      {"apply", "apply ex|ey|ez|e+|e-|laplacian", {"operator", "expr"}, true, false, false, false, false},
      {"matrix", "image in the N-dimensional representation at kappa = 1", {"expr"}, false, true, false, false, false},
      {"moyal", "kappa -> 0 limit of [f, g]/(i kappa)", {"f", "g"}, false, false, true, false, false},
      {"sphere-eval", "kappa -> 0 limit as a function on the sphere", {"expr"}, false, false, true, false, false},
      {"verify", "run a named invariant suite", {}, false, false, false, true, false},
      {"bench", "time the fast and direct decompositions", {}, false, false, false, false, true},
  };
  std::vector<std::string> positional(2);
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    for (std::size_t i = 0; i < s.positionals.size(); ++i) sub->add_option(s.positionals[i], positional[i])->required();
    if (s.params) {
      sub->add_option("--kappa", o.kappa, "specialize kappa to a rational");
      sub->add_option("--u", o.u, "specialize u to a rational");
    }
    if (s.N) sub->add_option("--N", o.N, "representation dimension")->required();
    if (s.sphere) {
      sub->add_option("--u", o.u, "radius squared (default 1)");
      if (std::string(s.name) == "sphere-eval") sub->add_option("--grid", o.grid, "sample grid <ntheta>x<nphi>");
    }
    if (s.suite) {
      sub->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
      sub->add_option("--nmax", o.nmax, "largest basis degree (default 3)");
      sub->add_option("--seed", o.seed, "random seed");
    }
    if (s.bench) {
      sub->add_option("--nmax", o.nmax, "largest input degree (default 8)");
      sub->add_option("--seed", o.seed, "random seed");
      sub->add_option("--trials", o.trials, "inputs per degree");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  for (const auto& s : specs)
    if (sub->get_name() == s.name)
      for (std::size_t i = 0; i < s.positionals.size(); ++i) o.exprs.push_back(positional[i]);

  int status = 0;
  try {
    const Json result = run(sub->get_name(), o, status);
    out << result.dump() << "\n";
  } catch (const Error& e) {
    if (e.kind() == "UsageError") {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    out << Json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return status;
}

}  // namespace fuzzy
