#include "fuzzy/sphere.h"

#include <cmath>
#include <cstdio>
#include <mutex>

#include "fuzzy/error.h"

namespace fuzzy {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI(0, 1);

// w = u - z^2 = (R sin theta)^2 = J+ J-
ZPoly w_poly() { return ZPoly(std::vector<ParamPoly>{ParamPoly::u(), ParamPoly(0), ParamPoly(-1)}); }

Complex to_c(const GaussRational& g) { return {g.re().get_d(), g.im().get_d()}; }

double factorial(int n) {
  double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Condon-Shortley associated Legendre P^m_n(x), m >= 0.
double legendre(int n, int m, double x) {
  const double s = std::sqrt(std::max(0.0, 1 - x * x));
  double pmm = 1;
  for (int i = 1; i <= m; ++i) pmm *= -(2 * i - 1) * s;
  if (n == m) return pmm;
  double pm1 = x * (2 * m + 1) * pmm;
  if (n == m + 1) return pm1;
  double pl = 0;
  for (int l = m + 2; l <= n; ++l) {
    pl = ((2 * l - 1) * x * pm1 - (l + m - 1) * pmm) / (l - m);
    pmm = pm1;
    pm1 = pl;
  }
  return pl;
}

Complex ipow(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return 1;
    case 1: return kI;
    case 2: return -1;
    default: return -kI;
  }
}

// alpha_n at kappa = 0 times c_nm^{1/2}
double limit_scale(int n, int m, double R) {
  const double alpha = std::sqrt(factorial(2 * n + 1)) / (factorial(n) * std::pow(2 * R, n));
  const double c = factorial(n + m) / (factorial(2 * n) * factorial(n - m));
  return alpha * std::sqrt(c);
}

}  // namespace

JForm JForm::constant(const ParamPoly& c) { return part(0, ZPoly(c)); }

JForm JForm::part(int m, const ZPoly& p) {
  JForm j;
  j.add_part(m, p);
  return j;
}

JForm JForm::x() { return (jp() + jm()).scaled(ParamPoly(GaussRational(frac(1, 2)))); }

JForm JForm::y() { return (jp() - jm()).scaled(ParamPoly(GaussRational(0, frac(-1, 2)))); }

void JForm::add_part(int m, const ZPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = parts_.try_emplace(m, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) parts_.erase(it);
}

int JForm::band_limit() const {
  int b = 0;
  for (const auto& [m, p] : parts_) b = std::max(b, std::abs(m) + p.degree());
  return b;
}

JForm& JForm::operator+=(const JForm& o) {
  for (const auto& [m, p] : o.parts_) add_part(m, p);
  return *this;
}

JForm& JForm::operator-=(const JForm& o) {
  for (const auto& [m, p] : o.parts_) add_part(m, -p);
  return *this;
}

JForm operator*(const JForm& a, const JForm& b) {
  JForm out;
  const ZPoly w = w_poly();
  for (const auto& [ma, p] : a.parts_) {
    for (const auto& [mb, q] : b.parts_) {
      // J+^k J-^k = w^k
      const int k = (ma > 0 && mb < 0) || (ma < 0 && mb > 0) ? std::min(std::abs(ma), std::abs(mb)) : 0;
      out.add_part(ma + mb, pow(w, static_cast<unsigned>(k)) * p * q);
    }
  }
  return out;
}

JForm JForm::scaled(const ParamPoly& c) const {
  JForm out;
  for (const auto& [m, p] : parts_) out.add_part(m, p.scaled(c));
  return out;
}

Complex JForm::eval(double R, double theta, double phi) const {
  const Complex jp = kI * std::exp(-kI * phi) * R * std::sin(theta);
  const Complex jm = -kI * std::exp(kI * phi) * R * std::sin(theta);
  const double z = R * std::cos(theta);
  const Rational u0(R * R);
  Complex total = 0;
  for (const auto& [m, p] : parts_) {
    Complex acc = 0;
    for (int b = p.degree(); b >= 0; --b) acc = acc * z + to_c(p.coeff(b).eval(0, u0));
    total += acc * std::pow(m >= 0 ? jp : jm, std::abs(m));
  }
  return total;
}

std::string JForm::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& [m, p] : parts_) {
    if (!out.empty()) out += " + ";
    if (m != 0) out += (m > 0 ? "Jp" : "Jm") + (std::abs(m) > 1 ? "^" + std::to_string(std::abs(m)) : std::string()) + "*";
    out += "(" + p.to_string() + ")";
  }
  return out;
}

Complex ylm(int n, int m, double theta, double phi) {
  if (n < 0 || std::abs(m) > n) throw Error("DomainError", "need |m| <= n");
  const int am = std::abs(m);
  const double norm = std::sqrt((2 * n + 1) * factorial(n - am) / factorial(n + am));
  Complex standard = norm * legendre(n, am, std::cos(theta)) * std::exp(kI * double(am) * phi);
  if (m < 0) standard = (am % 2 == 0 ? 1.0 : -1.0) * std::conj(standard);
  return ipow(m) * standard;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0);
  weights.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 1;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[static_cast<std::size_t>(i)] = x;
    weights[static_cast<std::size_t>(i)] = 2 / ((1 - x * x) * dp * dp);
  }
}

Grid Grid::make(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) throw Error("DomainError", "grid needs positive sizes");
  Grid g;
  std::vector<double> x;
  gauss_legendre(n_theta, x, g.theta_weight);
  for (double v : x) g.theta.push_back(std::acos(v));
  for (int j = 0; j < n_phi; ++j) g.phi.push_back(2 * kPi * j / n_phi);
  return g;
}

Grid Grid::for_band(int n_max) { return make((2 * n_max + 2 + 1) / 2, 2 * n_max + 2); }

Complex SphereFunction::eval(double theta, double phi) const {
  return jform ? eval_jform(theta, phi) : eval_harmonics(theta, phi);
}

Complex SphereFunction::eval_harmonics(double theta, double phi) const {
  Complex s = 0;
  for (const auto& [mode, c] : harmonics) s += c * ylm(mode.n, mode.m, theta, phi);
  return s;
}

Complex SphereFunction::eval_jform(double theta, double phi) const {
  if (!jform) throw Error("MissingExactForm", "function has no exact form");
  return jform_scale * jform->eval(R, theta, phi);
}

int SphereFunction::band_limit() const {
  int b = 0;
  for (const auto& [mode, c] : harmonics) b = std::max(b, mode.n);
  if (jform) b = std::max(b, jform->band_limit());
  return b;
}

Complex sphere_inner(const SphereFunction& F, const SphereFunction& G, std::optional<Grid> grid) {
  const Grid g = grid ? *grid : Grid::for_band(std::max(F.band_limit(), G.band_limit()));
  Complex s = 0;
  for (std::size_t i = 0; i < g.theta.size(); ++i) {
    Complex row = 0;
    for (double phi : g.phi) row += std::conj(F.eval(g.theta[i], phi)) * G.eval(g.theta[i], phi);
    s += g.theta_weight[i] * row;
  }
  // (1/4pi) * (2pi / n_phi) * sum
  return s / (2.0 * static_cast<double>(g.phi.size()));
}

SphereFunction from_jform(const JForm& j, double R, Complex scale) {
  SphereFunction F;
  F.R = R;
  F.jform = j;
  F.jform_scale = scale;
  const int band = j.band_limit();
  const Grid g = Grid::for_band(band);
  for (int n = 0; n <= band; ++n) {
    for (int m = -n; m <= n; ++m) {
      SphereFunction Y;
      Y.R = R;
      Y.harmonics[{n, m}] = 1;
      const Complex c = sphere_inner(Y, F, g);
      if (std::abs(c) > 1e-12) F.harmonics[{n, m}] = c;
    }
  }
  return F;
}

const JForm& basis_jform(int n, int m) {
  static std::mutex mu;
  static std::map<Mode, JForm> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, m});
  if (it != cache.end()) return it->second;
  const ZPoly p = build_T(n, m).j_poly(m).map_coeffs(
      [&](const ParamPoly& c) { return c.times_kappa(m - n).kappa_to_zero(); });
  return cache.emplace(Mode{n, m}, JForm::part(m, p)).first->second;
}

SphereFunction to_sphere(const BasisDecomp& d, double R) {
  if (!(R > 0)) throw Error("DomainError", "radius must be positive");
  SphereFunction F;
  F.R = R;
  JForm j;
  const Rational u0(R * R);
  for (const auto& [mode, c] : d.terms()) {
    const auto [n, m] = mode;
    const ParamPoly scaled = c.times_kappa(n - m);
    if (scaled.min_kappa_exp() < 0) {
      throw Error("DivergentLimit", "coefficient of T(" + std::to_string(n) + "," + std::to_string(m) + ") has a pole at kappa = 0");
    }
    const ParamPoly limit = scaled.kappa_to_zero();
    if (limit.is_zero()) continue;
    const double sign = n % 2 == 0 ? 1 : -1;
    F.harmonics[{n, -m}] += sign * to_c(limit.eval(0, u0)) / limit_scale(n, m, R);
    j += basis_jform(n, m).scaled(limit);
  }
  for (auto it = F.harmonics.begin(); it != F.harmonics.end();) it = it->second == Complex(0) ? F.harmonics.erase(it) : std::next(it);
  F.jform = j;
  return F;
}

SphereFunction normalized_basis_limit(int n, int m, double R) {
  BasisDecomp d;
  d.add({n, m}, ParamPoly::kappa(m - n));
  SphereFunction F = to_sphere(d, R);
  const double s = limit_scale(n, m, R);
  for (auto& [mode, c] : F.harmonics) c *= s;
  F.jform_scale *= s;
  return F;
}

JForm poisson(const JForm& f, const JForm& g) {
  const ZPoly w = w_poly();
  JForm out;
  for (const auto& [mf, p] : f.parts()) {
    for (const auto& [mg, q] : g.parts()) {
      // d_phi (J^m p) = -i m J^m p
      const ParamPoly lf(GaussRational(0, Rational(-mf)));
      const ParamPoly lg(GaussRational(0, Rational(-mg)));
      const int k = (mf > 0 && mg < 0) || (mf < 0 && mg > 0) ? std::min(std::abs(mf), std::abs(mg)) : 0;
      // J_f J_g [ (lf|mg| - lg|mf|) z p q / w + lg q p' - lf p q' ], with J_f J_g = J^{mf+mg} w^k
      ZPoly tail = q * p.derivative() * ZPoly(lg) - p * q.derivative() * ZPoly(lf);
      ZPoly r;
      if (k == 0) {
        r = tail;
      } else {
        const ParamPoly a = lf.scaled(GaussRational(std::abs(mg))) - lg.scaled(GaussRational(std::abs(mf)));
        const ZPoly wk1 = pow(w, static_cast<unsigned>(k - 1));
        r = wk1 * (ZPoly::z() * p * q * ZPoly(a) + w * tail);
      }
      out += JForm::part(mf + mg, r);
    }
  }
  return out;
}

SphereFunction poisson(const SphereFunction& F, const SphereFunction& G) {
  if (!F.jform || !G.jform) throw Error("MissingExactForm", "poisson needs exact forms");
  return from_jform(poisson(*F.jform, *G.jform), F.R, F.jform_scale * G.jform_scale);
}

SphereFunction moyal_limit(const NormalForm& f, const NormalForm& g, double R) {
  const BasisDecomp d = decompose(commutator(f, g));
  BasisDecomp scaled;
  for (const auto& [mode, c] : d.terms()) {
    if (c.times_kappa(mode.n - mode.m).min_kappa_exp() < 1) {
      throw Error("NotDivisible", "commutator coefficient of T(" + std::to_string(mode.n) + "," +
                                      std::to_string(mode.m) + ") is not O(kappa)");
    }
    // divide by i kappa
    scaled.add(mode, c.times_kappa(-1).scaled(GaussRational(0, -1)));
  }
  return to_sphere(scaled, R);
}

std::map<Mode, Complex> vector_field_harmonics(Operator op, const std::map<Mode, Complex>& h) {
  std::map<Mode, Complex> out;
  auto add = [&out](Mode mode, Complex c) {
    if (c != Complex(0)) out[mode] += c;
  };
  // {J+, Y^M} = -i sqrt((n+M)(n-M+1)) Y^{M-1},  {J-, Y^M} = -i sqrt((n-M)(n+M+1)) Y^{M+1}
  auto lower = [&](Complex scale) {
    for (const auto& [mode, c] : h)
      if (mode.m > -mode.n) add({mode.n, mode.m - 1}, scale * -kI * std::sqrt(double((mode.n + mode.m) * (mode.n - mode.m + 1))) * c);
  };
  auto raise = [&](Complex scale) {
    for (const auto& [mode, c] : h)
      if (mode.m < mode.n) add({mode.n, mode.m + 1}, scale * -kI * std::sqrt(double((mode.n - mode.m) * (mode.n + mode.m + 1))) * c);
  };
  switch (op) {
    case Operator::Ez:
      for (const auto& [mode, c] : h) add(mode, kI * double(mode.m) * c);
      break;
    case Operator::Laplacian:
      for (const auto& [mode, c] : h) add(mode, -double(mode.n * (mode.n + 1)) * c);
      break;
    case Operator::Eplus:
      lower(1);
      break;
    case Operator::Eminus:
      raise(1);
      break;
    case Operator::Ex:  // x = (J+ + J-)/2
      lower(0.5);
      raise(0.5);
      break;
    case Operator::Ey:  // y = (J+ - J-)/(2i)
      lower(-0.5 * kI);
      raise(0.5 * kI);
      break;
  }
  for (auto it = out.begin(); it != out.end();) it = std::abs(it->second) < 1e-300 ? out.erase(it) : std::next(it);
  return out;
}

SphereFunction vector_field(Operator op, const SphereFunction& F) {
  if (!F.jform) {
    SphereFunction out;
    out.R = F.R;
    out.harmonics = vector_field_harmonics(op, F.harmonics);
    return out;
  }
  const JForm& f = *F.jform;
  JForm r;
  switch (op) {
    case Operator::Ex: r = poisson(JForm::x(), f); break;
    case Operator::Ey: r = poisson(JForm::y(), f); break;
    case Operator::Ez: r = poisson(JForm::z(), f); break;
    case Operator::Eplus: r = poisson(JForm::jp(), f); break;
    case Operator::Eminus: r = poisson(JForm::jm(), f); break;
    case Operator::Laplacian:
      for (const JForm& a : {JForm::x(), JForm::y(), JForm::z()}) r += poisson(a, poisson(a, f));
      break;
  }
  return from_jform(r, F.R, F.jform_scale);
}

std::string grid_dump(const SphereFunction& F, const Grid& grid) {
  std::string out;
  char buf[128];
  for (double theta : grid.theta) {
    for (double phi : grid.phi) {
      const Complex v = F.eval(theta, phi);
      std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g\n", theta, phi, v.real(), v.imag());
      out += buf;
    }
  }
  return out;
}

}  // namespace fuzzy
