#include "fuzzy/normal_form.h"

#include <mutex>

#include "fuzzy/error.h"

namespace fuzzy {

// --- ZPoly -----------------------------------------------------------------

namespace {
const ParamPoly kZero;
}

ZPoly::ZPoly(const ParamPoly& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

ZPoly::ZPoly(std::vector<ParamPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void ZPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const ParamPoly& ZPoly::coeff(int b) const {
  if (b < 0 || b > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(b)];
}

void ZPoly::add_term(int b, const ParamPoly& c) {
  if (c.is_zero()) return;
  if (coeffs_.size() <= static_cast<std::size_t>(b)) coeffs_.resize(static_cast<std::size_t>(b) + 1);
  coeffs_[static_cast<std::size_t>(b)] += c;
  trim();
}

ZPoly ZPoly::shifted(const ParamPoly& shift) const {
  if (shift.is_zero() || degree() < 1) return *this;
  // Horner in (z + shift).
  std::vector<ParamPoly> acc;
  for (int b = degree(); b >= 0; --b) {
    std::vector<ParamPoly> next(acc.size() + 1);
    for (std::size_t e = 0; e < acc.size(); ++e) {
      next[e + 1] += acc[e];
      next[e] += acc[e] * shift;
    }
    next[0] += coeffs_[static_cast<std::size_t>(b)];
    acc = std::move(next);
  }
  return ZPoly(std::move(acc));
}

ZPoly ZPoly::shifted_kappa(int j) const {
  if (j == 0) return *this;
  return shifted(ParamPoly::monomial(j, 1, 0));
}

ParamPoly ZPoly::eval(const ParamPoly& at) const {
  ParamPoly acc;
  for (int b = degree(); b >= 0; --b) acc = acc * at + coeffs_[static_cast<std::size_t>(b)];
  return acc;
}

ZPoly ZPoly::derivative() const {
  std::vector<ParamPoly> d;
  for (int b = 1; b <= degree(); ++b) d.push_back(coeffs_[static_cast<std::size_t>(b)].scaled(b));
  return ZPoly(std::move(d));
}

ZPoly ZPoly::scaled(const ParamPoly& c) const {
  std::vector<ParamPoly> r;
  r.reserve(coeffs_.size());
  for (const auto& v : coeffs_) r.push_back(v * c);
  return ZPoly(std::move(r));
}

ZPoly ZPoly::conj() const {
  return map_coeffs([](const ParamPoly& p) { return p.conj(); });
}

ZPoly ZPoly::map_coeffs(const std::function<ParamPoly(const ParamPoly&)>& fn) const {
  std::vector<ParamPoly> r;
  r.reserve(coeffs_.size());
  for (const auto& v : coeffs_) r.push_back(fn(v));
  return ZPoly(std::move(r));
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t b = 0; b < o.coeffs_.size(); ++b) coeffs_[b] += o.coeffs_[b];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t b = 0; b < o.coeffs_.size(); ++b) coeffs_[b] -= o.coeffs_[b];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ParamPoly> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ZPoly(std::move(r));
}

ZPoly pow(const ZPoly& base, unsigned exponent) {
  ZPoly r(ParamPoly(1));
  for (unsigned i = 0; i < exponent; ++i) r = r * base;
  return r;
}

std::string ZPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int b = 0; b <= degree(); ++b) {
    const ParamPoly& c = coeffs_[static_cast<std::size_t>(b)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (b == 1) out += "*z";
    if (b > 1) out += "*z^" + std::to_string(b);
  }
  return out;
}

// --- Casimir products -------------------------------------------------------

namespace {

// u - (z + s*k)(z + t*k)
ZPoly casimir_factor(int s, int t) {
  ZPoly zs = ZPoly::z() + ZPoly(ParamPoly::monomial(s, 1, 0));
  ZPoly zt = ZPoly::z() + ZPoly(ParamPoly::monomial(t, 1, 0));
  return ZPoly(ParamPoly::u()) - zs * zt;
}

struct ProductCache {
  std::mutex mutex;
  std::map<int, ZPoly> values;
};

const ZPoly& cached_product(ProductCache& cache, int k, int sign) {
  std::lock_guard lock(cache.mutex);
  auto it = cache.values.find(k);
  if (it != cache.values.end()) return it->second;
  ZPoly r(ParamPoly(1));
  for (int s = 0; s < k; ++s) r = r * casimir_factor(sign * s, sign * (s + 1));
  return cache.values.emplace(k, std::move(r)).first->second;
}

}  // namespace

const ZPoly& jm_jp_product(int k) {
  static ProductCache cache;
  return cached_product(cache, k, +1);
}

const ZPoly& jp_jm_product(int k) {
  static ProductCache cache;
  return cached_product(cache, k, -1);
}

// --- NormalForm -------------------------------------------------------------

NormalForm::NormalForm(const ParamPoly& scalar) { add_sector(0, ZPoly(scalar)); }

NormalForm::NormalForm(Sectors sectors) {
  for (auto& [m, p] : sectors) add_sector(m, p);
}

NormalForm NormalForm::sector(int m, const ZPoly& p) {
  NormalForm f;
  f.add_sector(m, p);
  return f;
}

NormalForm NormalForm::jp(int power) { return sector(power, ZPoly(ParamPoly(1))); }
NormalForm NormalForm::jm(int power) { return sector(-power, ZPoly(ParamPoly(1))); }
NormalForm NormalForm::z(int power) {
  ZPoly p;
  p.add_term(power, ParamPoly(1));
  return sector(0, p);
}

NormalForm NormalForm::monomial(const Pbw& e, const ParamPoly& coeff) {
  if (e.a < 0 || e.b < 0 || e.c < 0) throw Error("DomainError", "negative PBW exponent");
  ZPoly p;
  p.add_term(e.b, coeff);
  if (e.a > 0 && e.c > 0) {
    // J+^a z^b J-^c is not canonical; reduce it through the product.
    return nf_mul(nf_mul(jp(e.a), sector(0, p)), jm(e.c));
  }
  return sector(e.a - e.c, p);
}

void NormalForm::add_sector(int m, const ZPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = sectors_.try_emplace(m, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) sectors_.erase(it);
  }
}

const ZPoly& NormalForm::sector_poly(int m) const {
  static const ZPoly empty;
  auto it = sectors_.find(m);
  return it == sectors_.end() ? empty : it->second;
}

std::map<Pbw, ParamPoly> NormalForm::terms() const {
  std::map<Pbw, ParamPoly> out;
  for (const auto& [m, p] : sectors_) {
    for (int b = 0; b <= p.degree(); ++b) {
      const ParamPoly& c = p.coeff(b);
      if (c.is_zero()) continue;
      out.emplace(m >= 0 ? Pbw{m, b, 0} : Pbw{0, b, -m}, c);
    }
  }
  return out;
}

int NormalForm::degree() const {
  int d = -1;
  for (const auto& [m, p] : sectors_) d = std::max(d, std::abs(m) + p.degree());
  return d;
}

ZPoly NormalForm::j_poly(int m) const {
  const ZPoly& p = sector_poly(m);
  // p(z) J-^k = J-^k p(z - k*kappa)
  return m >= 0 ? p : p.shifted_kappa(m);
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
  for (const auto& [m, p] : o.sectors_) add_sector(m, p);
  return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& o) {
  for (const auto& [m, p] : o.sectors_) add_sector(m, -p);
  return *this;
}

NormalForm NormalForm::scaled(const ParamPoly& c) const {
  NormalForm r;
  for (const auto& [m, p] : sectors_) r.add_sector(m, p.scaled(c));
  return r;
}

NormalForm NormalForm::map_coeffs(const std::function<ParamPoly(const ParamPoly&)>& fn) const {
  NormalForm r;
  for (const auto& [m, p] : sectors_) r.add_sector(m, p.map_coeffs(fn));
  return r;
}

std::string NormalForm::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (e.a > 0) out += "*Jp" + (e.a > 1 ? "^" + std::to_string(e.a) : std::string());
    if (e.b > 0) out += "*z" + (e.b > 1 ? "^" + std::to_string(e.b) : std::string());
    if (e.c > 0) out += "*Jm" + (e.c > 1 ? "^" + std::to_string(e.c) : std::string());
  }
  return out;
}

namespace {

// (sector m1, p) * (sector m2, q) in canonical layout.
void multiply_sectors(int m1, const ZPoly& p, int m2, const ZPoly& q, NormalForm::Sectors& out) {
  auto emit = [&out](int m, ZPoly r) {
    if (r.is_zero()) return;
    auto [it, inserted] = out.try_emplace(m, std::move(r));
    if (!inserted) it->second += r;
  };
  if (m1 >= 0 && m2 >= 0) {
    // J+^a p J+^b q = J+^{a+b} p(z + b k) q
    emit(m1 + m2, p.shifted_kappa(m2) * q);
  } else if (m1 >= 0 && m2 < 0) {
    const int a = m1;
    const int k = -m2;
    const ZPoly r = p * q;
    if (a >= k) {
      // J+^a r J-^k = J+^{a-k} (J+^k J-^k) r(z - k k)
      emit(a - k, jp_jm_product(k) * r.shifted_kappa(-k));
    } else {
      emit(a - k, jp_jm_product(a) * r.shifted_kappa(-a));
    }
  } else if (m1 < 0 && m2 >= 0) {
    const int k = -m1;
    const int b = m2;
    if (b >= k) {
      // p J-^k J+^b q = J+^{b-k} [p (J-^k J+^k)](z + (b-k) k) q
      emit(b - k, (p * jm_jp_product(k)).shifted_kappa(b - k) * q);
    } else {
      // p (J-^b J+^b)(z + (k-b) k) q(z + (k-b) k) J-^{k-b}
      emit(b - k, p * jm_jp_product(b).shifted_kappa(k - b) * q.shifted_kappa(k - b));
    }
  } else {
    // p J-^k q J-^l = p q(z + k k) J-^{k+l}
    emit(m1 + m2, p * q.shifted_kappa(-m1));
  }
}

}  // namespace

NormalForm nf_mul(const NormalForm& f, const NormalForm& g) {
  NormalForm::Sectors out;
  for (const auto& [m1, p] : f.sectors()) {
    for (const auto& [m2, q] : g.sectors()) multiply_sectors(m1, p, m2, q, out);
  }
  return NormalForm(std::move(out));
}

NormalForm nf_pow(const NormalForm& f, unsigned exponent) {
  NormalForm r(ParamPoly(1));
  for (unsigned i = 0; i < exponent; ++i) r = nf_mul(r, f);
  return r;
}

NormalForm commutator(const NormalForm& f, const NormalForm& g) { return nf_mul(f, g) - nf_mul(g, f); }

NormalForm dagger(const NormalForm& f) {
  NormalForm::Sectors out;
  for (const auto& [m, p] : f.sectors()) out.emplace(-m, p.conj());
  return NormalForm(std::move(out));
}

NormalForm nf_x() {
  const ParamPoly half(GaussRational(frac(1, 2)));
  return (NormalForm::jp() + NormalForm::jm()).scaled(half);
}

NormalForm nf_y() {
  const ParamPoly minus_half_i(GaussRational(Rational(0), frac(-1, 2)));
  return (NormalForm::jp() - NormalForm::jm()).scaled(minus_half_i);
}

NormalForm evaluate_words(const FreeElement& f) {
  f.alphabet();
  const NormalForm x = nf_x();
  const NormalForm y = nf_y();
  NormalForm total;
  for (const auto& [w, c] : f.terms()) {
    NormalForm acc(c);
    for (char ch : w) {
      switch (ch) {
        case 'x': acc = nf_mul(acc, x); break;
        case 'y': acc = nf_mul(acc, y); break;
        case 'z': acc = nf_mul(acc, NormalForm::z()); break;
        case 'p': acc = nf_mul(acc, NormalForm::jp()); break;
        case 'm': acc = nf_mul(acc, NormalForm::jm()); break;
        default: throw Error("SyntaxError", "unknown letter in word");
      }
    }
    total += acc;
  }
  return total;
}

std::map<int, NormalForm> split_by_weight(const NormalForm& f) {
  std::map<int, NormalForm::Sectors> parts;
  for (const auto& [m, p] : f.sectors()) {
    for (int b = 0; b <= p.degree(); ++b) {
      for (const auto& [w, c] : p.coeff(b).split_by_weight()) {
        ZPoly piece;
        piece.add_term(b, c);
        auto& sec = parts[w + std::abs(m) + b];
        auto [it, inserted] = sec.try_emplace(m, piece);
        if (!inserted) it->second += piece;
      }
    }
  }
  std::map<int, NormalForm> out;
  for (auto& [w, sec] : parts) out.emplace(w, NormalForm(std::move(sec)));
  return out;
}

}  // namespace fuzzy
