#include "fuzzy/param_poly.h"

#include <algorithm>

#include "fuzzy/error.h"

namespace fuzzy {

ParamPoly::ParamPoly(const GaussRational& c) {
  if (!c.is_zero()) terms_.emplace(ParamExp{}, c);
}

ParamPoly ParamPoly::monomial(const GaussRational& c, int kappa_exp, int u_exp) {
  if (u_exp < 0) throw Error("DomainError", "negative power of u");
  ParamPoly p;
  p.add_term({kappa_exp, u_exp}, c);
  return p;
}

void ParamPoly::add_term(ParamExp e, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamExp{});
}

std::optional<GaussRational> ParamPoly::constant_value() const {
  if (terms_.empty()) return GaussRational(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

GaussRational ParamPoly::coeff(ParamExp e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussRational(0) : it->second;
}

int ParamPoly::min_kappa_exp() const {
  if (terms_.empty()) return 0;
  int m = terms_.begin()->first.kappa;
  for (const auto& [e, c] : terms_) m = std::min(m, e.kappa);
  return m;
}

int ParamPoly::max_u_exp() const {
  int m = -1;
  for (const auto& [e, c] : terms_) m = std::max(m, e.u);
  return m;
}

std::optional<int> ParamPoly::homogeneous_weight() const {
  if (terms_.empty()) return std::nullopt;
  int w = terms_.begin()->first.weight();
  for (const auto& [e, c] : terms_) {
    if (e.weight() != w) return std::nullopt;
  }
  return w;
}

std::map<int, ParamPoly> ParamPoly::split_by_weight() const {
  std::map<int, ParamPoly> parts;
  for (const auto& [e, c] : terms_) parts[e.weight()].terms_.emplace(e, c);
  return parts;
}

ParamPoly ParamPoly::conj() const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
  return r;
}

ParamPoly ParamPoly::times_kappa(int exp) const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(ParamExp{e.kappa + exp, e.u}, c);
  return r;
}

ParamPoly ParamPoly::scaled(const GaussRational& c) const {
  ParamPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

namespace {

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw Error("DivisionByZero", "kappa = 0 meets a Laurent term");
    Rational inv = 1 / base;
    return rational_pow(inv, -exponent);
  }
  Rational r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace

GaussRational ParamPoly::eval(const Rational& k0, const Rational& u0) const {
  GaussRational sum;
  for (const auto& [e, c] : terms_) {
    Rational scale = rational_pow(k0, e.kappa) * rational_pow(u0, e.u);
    sum += c * GaussRational(scale);
  }
  return sum;
}

ParamPoly ParamPoly::eval_kappa(const Rational& k0) const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) {
    r.add_term({0, e.u}, c * GaussRational(rational_pow(k0, e.kappa)));
  }
  return r;
}

ParamPoly ParamPoly::kappa_to_zero() const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.kappa < 0) throw Error("DivergentLimit", "pole at kappa = 0 in " + to_string());
    if (e.kappa == 0) r.terms_.emplace(e, c);
  }
  return r;
}

ParamPoly ParamPoly::divide_exact(const ParamPoly& divisor) const {
  if (divisor.is_zero()) throw Error("DegenerateNorm", "division by the zero polynomial");
  const int du = divisor.max_u_exp();
  ParamPoly lead;
  for (const auto& [e, c] : divisor.terms_) {
    if (e.u == du) lead.terms_.emplace(e, c);
  }
  if (!lead.is_monomial()) {
    throw Error("NotDivisible", "divisor leading coefficient is not a monomial");
  }
  const ParamExp lead_exp = lead.terms_.begin()->first;
  const GaussRational lead_coeff = lead.terms_.begin()->second;

  ParamPoly remainder = *this;
  ParamPoly quotient;
  while (!remainder.is_zero()) {
    const int ru = remainder.max_u_exp();
    if (ru < du) throw Error("NotDivisible", to_string() + " / " + divisor.to_string());
    ParamPoly step;
    for (const auto& [e, c] : remainder.terms_) {
      if (e.u == ru) step.terms_.emplace(ParamExp{e.kappa - lead_exp.kappa, ru - du}, c / lead_coeff);
    }
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term({ea.kappa + eb.kappa, ea.u + eb.u}, ca * cb);
    }
  }
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly ParamPoly::operator-() const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    if (e.kappa != 0) mono = e.kappa == 1 ? "k" : "k^" + std::to_string(e.kappa);
    if (e.u != 0) {
      if (!mono.empty()) mono += "*";
      mono += e.u == 1 ? "u" : "u^" + std::to_string(e.u);
    }
    std::string term;
    if (mono.empty()) {
      term = c.to_string();
    } else if (c.is_one()) {
      term = mono;
    } else if (c == GaussRational(-1)) {
      term = "-" + mono;
    } else {
      term = c.to_string() + "*" + mono;
    }
    if (first) {
      out = term;
      first = false;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

ParamPoly pow(const ParamPoly& base, unsigned exponent) {
  ParamPoly result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

// ---------------------------------------------------------------------------

GaussRational UPoly::eval(const GaussRational& x) const {
  GaussRational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

void UPoly::trim() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

UPoly poly_interpolate(const std::vector<std::pair<Rational, GaussRational>>& samples,
                       int degree_bound) {
  if (degree_bound < 0) throw Error("DomainError", "negative degree bound");
  if (static_cast<int>(samples.size()) < degree_bound + 1) {
    throw Error("InsufficientSamples", "need at least degree_bound + 1 samples");
  }
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (samples[i].first == samples[j].first) {
        throw Error("DuplicateNode", "repeated interpolation node u = " + to_string(samples[i].first));
      }
    }
  }

  // Newton divided differences, then expansion into the monomial basis.
  std::vector<GaussRational> dd;
  dd.reserve(n);
  for (const auto& s : samples) dd.push_back(s.second);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational span = samples[i].first - samples[i - level].first;
      dd[i] = (dd[i] - dd[i - 1]) / GaussRational(span);
    }
  }
  UPoly result;
  result.coeffs.assign(1, dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    // result = result * (u - x_k) + dd[k]
    std::vector<GaussRational> next(result.coeffs.size() + 1);
    GaussRational node(-samples[k].first);
    for (std::size_t e = 0; e < result.coeffs.size(); ++e) {
      next[e + 1] += result.coeffs[e];
      next[e] += result.coeffs[e] * node;
    }
    next[0] += dd[k];
    result.coeffs = std::move(next);
  }
  result.trim();
  if (result.degree() > degree_bound) {
    throw Error("DegreeExceeded", "interpolant has degree " + std::to_string(result.degree()) +
                                      " > bound " + std::to_string(degree_bound));
  }
  return result;
}

ParamPoly weight_lift(const UPoly& q, int total_weight, int word_degree) {
  ParamPoly r;
  for (int e = 0; e <= q.degree(); ++e) {
    r.add_term({total_weight - word_degree - 2 * e, e}, q.coeffs[static_cast<std::size_t>(e)]);
  }
  return r;
}

UPoly at_kappa_one(const ParamPoly& p) {
  UPoly q;
  for (const auto& [e, c] : p.terms()) {
    if (q.coeffs.size() <= static_cast<std::size_t>(e.u)) q.coeffs.resize(static_cast<std::size_t>(e.u) + 1);
    q.coeffs[static_cast<std::size_t>(e.u)] += c;
  }
  q.trim();
  return q;
}

}  // namespace fuzzy
