#include "fuzzy/basis.h"

#include <gmpxx.h>

#include <cmath>
#include <memory>
#include <mutex>

#include "fuzzy/error.h"

namespace fuzzy {

namespace {

Rational factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

void check_mode(int n, int m) {
  if (n < 0 || std::abs(m) > n) {
    throw Error("DomainError", "no basis element T(" + std::to_string(n) + "," + std::to_string(m) + ")");
  }
}

// Rows T^n_n, ..., T^{-n}_n, computed together since each is e- of the previous.
class TCache {
 public:
  const NormalForm& get(int n, int m) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = rows_.find(n);
    if (it == rows_.end()) {
      std::vector<NormalForm> row;
      row.reserve(static_cast<std::size_t>(2 * n + 1));
      row.push_back(NormalForm::jp(n));
      const NormalForm jm = NormalForm::jm();
      for (int k = 1; k <= 2 * n; ++k) row.push_back(commutator(jm, row.back()));
      it = rows_.emplace(n, std::move(row)).first;
    }
    return it->second[static_cast<std::size_t>(n - m)];
  }

 private:
  std::mutex mu_;
  std::map<int, std::vector<NormalForm>> rows_;
};

TCache& t_cache() {
  static TCache cache;
  return cache;
}

// Sector-0 reduction: subtract multiples of T^0_k until only a constant is left.
ParamPoly reduce_sector0(ZPoly p) {
  for (int k = p.degree(); k >= 1; --k) {
    const ParamPoly& c = p.coeff(k);
    if (c.is_zero()) continue;
    const ZPoly& t = build_T(k, 0).sector_poly(0);
    p -= t.scaled(c.divide_exact(t.leading()));
  }
  return p.coeff(0);
}

// Product of a single sector of f^dagger and g, projected on the scalars.
ParamPoly sector_inner(int m, const ZPoly& f_poly, const ZPoly& g_poly) {
  NormalForm fd = dagger(NormalForm::sector(m, f_poly));
  NormalForm prod = nf_mul(fd, NormalForm::sector(m, g_poly));
  return reduce_sector0(prod.sector_poly(0));
}

}  // namespace

ParamPoly BasisDecomp::coeff(Mode mode) const {
  auto it = terms_.find(mode);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void BasisDecomp::add(Mode mode, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mode, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BasisDecomp& BasisDecomp::operator+=(const BasisDecomp& o) {
  for (const auto& [mode, c] : o.terms_) add(mode, c);
  return *this;
}

BasisDecomp BasisDecomp::scaled(const ParamPoly& c) const {
  BasisDecomp out;
  for (const auto& [mode, v] : terms_) out.add(mode, v * c);
  return out;
}

NormalForm BasisDecomp::reconstruct() const {
  NormalForm out;
  for (const auto& [mode, c] : terms_) out += build_T(mode.n, mode.m).scaled(c);
  return out;
}

std::string BasisDecomp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mode, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*T(" + std::to_string(mode.n) + "," + std::to_string(mode.m) + ")";
  }
  return out;
}

const NormalForm& build_T(int n, int m) {
  check_mode(n, m);
  return t_cache().get(n, m);
}

ParamPoly nu_n(int n) {
  if (n < 0) throw Error("DomainError", "negative degree");
  ParamPoly prod(1);
  for (int r = 1; r <= n; ++r) {
    prod *= ParamPoly::u().scaled(GaussRational(4)) + ParamPoly::kappa(2).scaled(GaussRational(1 - r * r));
  }
  const Rational nf = factorial(n);
  return prod.scaled(GaussRational(nf * nf / factorial(2 * n + 1)));
}

ParamPoly norm_T(int n, int m) {
  check_mode(n, m);
  const Rational c = factorial(2 * n) * factorial(n - m) / factorial(n + m);
  return nu_n(n).times_kappa(2 * (n - m)).scaled(GaussRational(c));
}

const ParamPoly& computed_norm(int n, int m) {
  check_mode(n, m);
  static std::mutex mu;
  static std::map<Mode, ParamPoly> table;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find({n, m});
    if (it != table.end()) return it->second;
  }
  const NormalForm& t = build_T(n, m);
  ParamPoly value = sector_inner(m, t.sector_poly(m), t.sector_poly(m));
  std::lock_guard<std::mutex> lock(mu);
  return table.try_emplace({n, m}, std::move(value)).first->second;
}

int sigma_n(int n, const Rational& k0, const Rational& u0) {
  if (n < 0) throw Error("DomainError", "negative degree");
  if (sgn(u0) < 0) throw Error("DomainError", "R^2 must be nonnegative");
  if (n == 0) return 1;
  if (sgn(k0) == 0) return sgn(u0) > 0 ? 1 : 0;
  // Factors of nu_n are k0^2 (s - r^2), r = 1..n.
  const Rational s = 4 * u0 / (k0 * k0) + 1;
  mpz_class n0;
  mpz_class ceil_s = (s.get_num() + s.get_den() - 1) / s.get_den();
  mpz_sqrt(n0.get_mpz_t(), ceil_s.get_mpz_t());
  auto square = [](const mpz_class& a) { return Rational(mpz_class(a * a)); };
  while (square(n0) < s) ++n0;
  const long N0 = n0.get_si();
  if (n <= N0 - 1) return 1;
  if (square(n0) == s) return 0;
  return (n - N0 + 1) % 2 == 0 ? 1 : -1;
}

ParamPoly pi0(const NormalForm& f) { return reduce_sector0(f.sector_poly(0)); }

ParamPoly inner(const NormalForm& f, const NormalForm& g) {
  ParamPoly out;
  for (const auto& [m, p] : f.sectors()) {
    const ZPoly& q = g.sector_poly(m);
    if (!q.is_zero()) out += sector_inner(m, p, q);
  }
  return out;
}

BasisDecomp decompose(const NormalForm& f) {
  BasisDecomp out;
  for (const auto& [m, p] : f.sectors()) {
    const int am = std::abs(m);
    for (int n = am; n <= am + p.degree(); ++n) {
      const ParamPoly norm = computed_norm(n, m);
      if (norm.is_zero()) throw Error("DegenerateNorm", "vanishing norm of T(" + std::to_string(n) + "," + std::to_string(m) + ")");
      const NormalForm& t = build_T(n, m);
      ParamPoly num = sector_inner(m, t.sector_poly(m), p);
      if (!num.is_zero()) out.add({n, m}, num.divide_exact(norm));
    }
  }
  return out;
}

Operator parse_operator(const std::string& name) {
  if (name == "e_x" || name == "ex") return Operator::Ex;
  if (name == "e_y" || name == "ey") return Operator::Ey;
  if (name == "e_z" || name == "ez") return Operator::Ez;
  if (name == "e_+" || name == "e+" || name == "eplus") return Operator::Eplus;
  if (name == "e_-" || name == "e-" || name == "eminus") return Operator::Eminus;
  if (name == "Delta" || name == "Laplacian" || name == "laplacian" || name == "delta") return Operator::Laplacian;
  throw Error("UsageError", "unknown operator '" + name + "'");
}

BasisDecomp apply_operator(Operator op, const BasisDecomp& d) {
  const ParamPoly k = ParamPoly::kappa();
  const ParamPoly k2 = ParamPoly::kappa(2);
  auto eplus = [&](const BasisDecomp& in) {
    BasisDecomp out;
    for (const auto& [mode, c] : in.terms()) {
      const auto [n, m] = mode;
      if (m == n) continue;
      out.add({n, m + 1}, c * k2.scaled(GaussRational((n - m) * (n + m + 1))));
    }
    return out;
  };
  auto eminus = [](const BasisDecomp& in) {
    BasisDecomp out;
    for (const auto& [mode, c] : in.terms()) {
      if (mode.m > -mode.n) out.add({mode.n, mode.m - 1}, c);
    }
    return out;
  };
  BasisDecomp out;
  switch (op) {
    case Operator::Ez:
      for (const auto& [mode, c] : d.terms()) out.add(mode, c * k.scaled(GaussRational(mode.m)));
      return out;
    case Operator::Laplacian:
      for (const auto& [mode, c] : d.terms()) out.add(mode, c * k2.scaled(GaussRational(mode.n * (mode.n + 1))));
      return out;
    case Operator::Eplus:
      return eplus(d);
    case Operator::Eminus:
      return eminus(d);
    case Operator::Ex:
      out = eplus(d);
      out += eminus(d);
      return out.scaled(GaussRational(frac(1, 2)));
    case Operator::Ey:
      out = eplus(d);
      out += eminus(d).scaled(-1);
      return out.scaled(GaussRational(0, frac(-1, 2)));
  }
  return out;
}

NormalForm apply_operator(Operator op, const NormalForm& f) {
  const ParamPoly k = ParamPoly::kappa();
  switch (op) {
    case Operator::Ex: return commutator(nf_x(), f);
    case Operator::Ey: return commutator(nf_y(), f);
    case Operator::Ez: return commutator(NormalForm::z(), f);
    case Operator::Eplus: return commutator(NormalForm::jp(), f);
    case Operator::Eminus: return commutator(NormalForm::jm(), f);
    case Operator::Laplacian: {
      NormalForm ez = commutator(NormalForm::z(), f);
      return commutator(NormalForm::z(), ez) - ez.scaled(k) +
             commutator(NormalForm::jp(), commutator(NormalForm::jm(), f));
    }
  }
  return f;
}

ZPoly hahn_p(int n, int m, int N) {
  check_mode(n, m);
  if (N <= n) throw Error("DomainError", "need N > n");
  const int am = std::abs(m);
  const int d = n - am;
  auto rising = [](Rational a, int j) {
    Rational r(1);
    for (int i = 0; i < j; ++i) r *= a + i;
    return r;
  };
  // (-x)_j with x = z + (N - 1)/2, accumulated as polynomials in z
  const ZPoly x = ZPoly::z() + ZPoly(ParamPoly(frac(N - 1, 2)));
  ZPoly falling(ParamPoly(1));
  ZPoly sum;
  for (int j = 0; j <= d; ++j) {
    const Rational c = rising(am - n, j) * rising(n + am + 1, j) /
                       (rising(am + 1, j) * rising(am + 1 - N, j) * factorial(j));
    sum += falling.scaled(ParamPoly(c));
    falling = falling * (ZPoly(ParamPoly(j)) - x);
  }
  Rational pref = rising(am + 1, d) * rising(am + 1 - N, d) / factorial(d);
  if (d % 2 == 1) pref = -pref;
  ZPoly q = sum.scaled(ParamPoly(pref));
  if (m >= 0) return q;
  // Lower sectors are the adjoints; with the ladder power moved to the left
  // the argument shifts by |m|.
  if (am % 2 == 1) q = -q;
  return q.shifted(ParamPoly(-am));
}

OmegaResult omega_apply(int p, const NormalForm& f, const Rational& k0, const Rational& u0) {
  if (sgn(k0) == 0) throw Error("DomainError", "omega needs kappa != 0");
  const GaussRational nu = nu_n(p).eval(k0, u0);
  OmegaResult out;
  Rational alpha2(1);
  if (nu.is_zero()) {
    out.degenerate = true;
  } else {
    alpha2 = 1 / abs(nu.re());
  }
  NormalForm sum;
  for (int m = -p; m <= p; ++m) {
    const NormalForm& t = build_T(p, m);
    const Rational c = factorial(p + m) / (factorial(2 * p) * factorial(p - m));
    Rational kp(1);
    for (int i = 0; i < 2 * std::abs(m - p); ++i) kp *= k0;
    if (m - p < 0) kp = 1 / kp;
    sum += nf_mul(nf_mul(dagger(t), f), t).scaled(ParamPoly(alpha2 * c * kp));
  }
  out.value = sum.map_coeffs([&](const ParamPoly& c) { return ParamPoly(c.eval(k0, u0)); });
  return out;
}

bool left_ideal_z_member(const NormalForm& f) {
  for (const auto& [m, p] : f.sectors()) {
    (void)p;
    if (!f.j_poly(m).coeff(0).is_zero()) return false;
  }
  return true;
}

}  // namespace fuzzy
