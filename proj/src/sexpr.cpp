#include "fuzzy/sexpr.h"

#include <algorithm>
#include <mutex>

#include "fuzzy/basis.h"
#include "fuzzy/error.h"

namespace fuzzy {

namespace {

// Element of the enveloping algebra in the ordered basis x^a y^b z^c.
using Pbw3 = std::map<SIndex, ParamPoly>;

void add_to(Pbw3& p, const SIndex& i, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(i, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

int letter_rank(char g) { return g == 'x' ? 0 : g == 'y' ? 1 : 2; }

SIndex append(SIndex i, char g) {
  if (g == 'x') ++i.a;
  else if (g == 'y') ++i.b;
  else ++i.c;
  return i;
}

// [l, g] for generators with l > g in the ordering x < y < z.
std::vector<std::pair<char, ParamPoly>> bracket(char l, char g) {
  const ParamPoly ik = ParamPoly::i() * ParamPoly::kappa();
  if (l == 'y' && g == 'x') return {{'z', -ik}};
  if (l == 'z' && g == 'x') return {{'y', ik}};
  return {{'x', -ik}};  // [z, y]
}

class PbwMultiplier {
 public:
  // x^a y^b z^c * g
  const Pbw3& times(const SIndex& m, char g) { return lookup(right_, m, g, [&] { return right(m, g); }); }
  // g * x^a y^b z^c
  const Pbw3& times(char g, const SIndex& m) { return lookup(left_, m, g, [&] { return left(g, m); }); }

  Pbw3 times(const Pbw3& p, char g) {
    Pbw3 out;
    for (const auto& [m, c] : p)
      for (const auto& [i, d] : times(m, g)) add_to(out, i, c * d);
    return out;
  }
  Pbw3 times(char g, const Pbw3& p) {
    Pbw3 out;
    for (const auto& [m, c] : p)
      for (const auto& [i, d] : times(g, m)) add_to(out, i, c * d);
    return out;
  }

 private:
  using Memo = std::map<std::pair<SIndex, char>, Pbw3>;

  template <class Fn>
  const Pbw3& lookup(Memo& memo, const SIndex& m, char g, Fn compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo.find({m, g});
      if (it != memo.end()) return it->second;
    }
    Pbw3 out = compute();
    std::lock_guard<std::mutex> lock(mu_);
    return memo.try_emplace({m, g}, std::move(out)).first->second;
  }

  Pbw3 right(const SIndex& m, char g) {
    char last = m.c > 0 ? 'z' : m.b > 0 ? 'y' : m.a > 0 ? 'x' : 0;
    if (last == 0 || letter_rank(last) <= letter_rank(g)) return {{append(m, g), ParamPoly(1)}};
    SIndex rest = m;
    if (last == 'z') --rest.c;
    else --rest.b;
    // rest l g = (rest g) l + rest [l, g]
    Pbw3 out = times(Pbw3(times(rest, g)), last);
    for (const auto& [h, c] : bracket(last, g))
      for (const auto& [i, d] : times(rest, h)) add_to(out, i, c * d);
    return out;
  }

  Pbw3 left(char g, const SIndex& m) {
    char first = m.a > 0 ? 'x' : m.b > 0 ? 'y' : m.c > 0 ? 'z' : 0;
    if (first == 0 || letter_rank(g) <= letter_rank(first)) return {{append(m, g), ParamPoly(1)}};
    SIndex rest = m;
    if (first == 'x') --rest.a;
    else --rest.b;
    // g f rest = f (g rest) - [f, g] rest
    Pbw3 out = times(first, Pbw3(times(g, rest)));
    for (const auto& [h, c] : bracket(g, first))
      for (const auto& [i, d] : times(h, rest)) add_to(out, i, c * d);
    return out;
  }

  std::mutex mu_;
  Memo right_;
  Memo left_;
};

PbwMultiplier& multiplier() {
  static PbwMultiplier m;
  return m;
}

FreeElement to_cartesian(const FreeElement& f) {
  const FreeElement jp = FreeElement::word("x") + FreeElement::word("y", ParamPoly::i());
  const FreeElement jm = FreeElement::word("x") - FreeElement::word("y", ParamPoly::i());
  FreeElement out;
  for (const auto& [w, c] : f.terms()) {
    FreeElement prod(c);
    for (char l : w) prod = prod * (l == 'p' ? jp : l == 'm' ? jm : FreeElement::generator(l));
    out += prod;
  }
  return out;
}

Pbw3 word_to_pbw(const Word& w) {
  Pbw3 p{{SIndex{}, ParamPoly(1)}};
  for (char l : w) p = multiplier().times(p, l);
  return p;
}

const Pbw3& ssym_pbw(const SIndex& i) {
  static std::mutex mu;
  static std::map<SIndex, Pbw3> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(i);
    if (it != cache.end()) return it->second;
  }
  // Ssym(a,b,c) = Ssym(a-1,b,c) x + Ssym(a,b-1,c) y + Ssym(a,b,c-1) z
  Pbw3 out;
  if (i.degree() == 0) {
    out.emplace(SIndex{}, ParamPoly(1));
  } else {
    const std::pair<SIndex, char> parts[] = {
        {{i.a - 1, i.b, i.c}, 'x'}, {{i.a, i.b - 1, i.c}, 'y'}, {{i.a, i.b, i.c - 1}, 'z'}};
    for (const auto& [j, g] : parts) {
      if (j.a < 0 || j.b < 0 || j.c < 0) continue;
      for (const auto& [k, d] : multiplier().times(ssym_pbw(j), g)) add_to(out, k, d);
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(i, std::move(out)).first->second;
}

Rational multinomial(const SIndex& i) {
  mpz_class num, da, db, dc;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(i.degree()));
  mpz_fac_ui(da.get_mpz_t(), static_cast<unsigned long>(i.a));
  mpz_fac_ui(db.get_mpz_t(), static_cast<unsigned long>(i.b));
  mpz_fac_ui(dc.get_mpz_t(), static_cast<unsigned long>(i.c));
  return Rational(mpz_class(num / (da * db * dc)));
}

// Peels off the top degree: x^a y^b z^c leads Ssym(a,b,c) / multinomial.
SExpr pbw_to_sexpr(Pbw3 p) {
  SExpr out;
  while (!p.empty()) {
    int top = 0;
    for (const auto& [i, c] : p) top = std::max(top, i.degree());
    std::vector<std::pair<SIndex, ParamPoly>> lead;
    for (const auto& [i, c] : p)
      if (i.degree() == top) lead.emplace_back(i, c.scaled(GaussRational(1 / multinomial(i))));
    for (const auto& [i, c] : lead) {
      out.add(i, c);
      for (const auto& [j, d] : ssym_pbw(i)) add_to(p, j, -(c * d));
    }
  }
  return out;
}

// Commutator of a generator with a single Ssym in the enveloping algebra, re-symmetrized.
const SExpr& ad_basis(char axis, const SIndex& i) {
  static std::mutex mu;
  static std::map<std::pair<char, SIndex>, SExpr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({axis, i});
    if (it != cache.end()) return it->second;
  }
  const Pbw3& s = ssym_pbw(i);
  Pbw3 comm = multiplier().times(axis, s);
  for (const auto& [j, d] : multiplier().times(s, axis)) add_to(comm, j, -d);
  SExpr out = pbw_to_sexpr(std::move(comm));
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace({axis, i}, std::move(out)).first->second;
}

}  // namespace

SExpr SExpr::ssym(int a, int b, int c, const ParamPoly& coeff) {
  SExpr s;
  s.add({a, b, c}, coeff);
  return s;
}

ParamPoly SExpr::coeff(SIndex i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void SExpr::add(SIndex i, const ParamPoly& c) {
  if (i.a < 0 || i.b < 0 || i.c < 0 || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SExpr& SExpr::operator+=(const SExpr& o) {
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

SExpr& SExpr::operator-=(const SExpr& o) {
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

SExpr SExpr::scaled(const ParamPoly& c) const {
  SExpr out;
  for (const auto& [i, v] : terms_) out.add(i, v * c);
  return out;
}

std::map<int, SExpr> SExpr::by_degree() const {
  std::map<int, SExpr> out;
  for (const auto& [i, c] : terms_) out[i.degree()].add(i, c);
  return out;
}

std::string SExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*S(" + std::to_string(i.a) + "," + std::to_string(i.b) + "," +
           std::to_string(i.c) + ")";
  }
  return out;
}

FreeElement ssym_expand(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return {};
  Word w = Word(static_cast<std::size_t>(a), 'x') + Word(static_cast<std::size_t>(b), 'y') +
           Word(static_cast<std::size_t>(c), 'z');
  FreeElement out;
  do {
    out.add(w, ParamPoly(1));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

FreeElement sexpr_to_free(const SExpr& s) {
  FreeElement out;
  for (const auto& [i, c] : s.terms()) out += ssym_expand(i.a, i.b, i.c).scaled(c);
  return out;
}

SExpr formal_trace(const SExpr& s) {
  SExpr out;
  for (const auto& [i, c] : s.terms()) {
    out.add({i.a - 2, i.b, i.c}, c);
    out.add({i.a, i.b - 2, i.c}, c);
    out.add({i.a, i.b, i.c - 2}, c);
  }
  return out;
}

SExpr free_to_sexpr(const FreeElement& f) {
  const FreeElement cart = f.alphabet() == Alphabet::Ladder ? to_cartesian(f) : f;
  Pbw3 p;
  for (const auto& [w, c] : cart.terms())
    for (const auto& [i, d] : word_to_pbw(w)) add_to(p, i, c * d);
  return pbw_to_sexpr(std::move(p));
}

SExpr ad_gen(char axis, const SExpr& s) {
  if (axis != 'x' && axis != 'y' && axis != 'z') throw Error("DomainError", "axis must be x, y or z");
  SExpr out;
  for (const auto& [i, c] : s.terms()) out += ad_basis(axis, i).scaled(c);
  return out;
}

SExpr ad_formula(char axis, const SExpr& s) {
  const ParamPoly ik = ParamPoly::i() * ParamPoly::kappa();
  SExpr out;
  for (const auto& [i, v] : s.terms()) {
    const auto [a, b, c] = i;
    const ParamPoly w = v * ik;
    switch (axis) {
      case 'x':
        out.add({a, b - 1, c + 1}, w.scaled(GaussRational(c + 1)));
        out.add({a, b + 1, c - 1}, w.scaled(GaussRational(-(b + 1))));
        break;
      case 'y':
        out.add({a + 1, b, c - 1}, w.scaled(GaussRational(a + 1)));
        out.add({a - 1, b, c + 1}, w.scaled(GaussRational(-(c + 1))));
        break;
      case 'z':
        out.add({a - 1, b + 1, c}, w.scaled(GaussRational(b + 1)));
        out.add({a + 1, b - 1, c}, w.scaled(GaussRational(-(a + 1))));
        break;
      default:
        throw Error("DomainError", "axis must be x, y or z");
    }
  }
  return out;
}

bool split_check(int a, int b, int c, int m) {
  if (m < 0 || m > a + b + c) throw Error("DomainError", "split order out of range");
  FreeElement rhs;
  for (int d = 0; d <= m; ++d)
    for (int e = 0; d + e <= m; ++e) {
      const int f = m - d - e;
      rhs += ssym_expand(a - d, b - e, c - f) * ssym_expand(d, e, f);
    }
  return rhs == ssym_expand(a, b, c);
}

const SExpr& basis_sexpr(int n, int m) {
  if (n < 0 || std::abs(m) > n) throw Error("DomainError", "no basis element");
  static std::mutex mu;
  static std::map<int, std::vector<SExpr>> rows;
  std::lock_guard<std::mutex> lock(mu);
  auto it = rows.find(n);
  if (it == rows.end()) {
    std::vector<SExpr> row;
    SExpr top;
    ParamPoly ir(1);
    for (int r = 0; r <= n; ++r) {
      top.add({n - r, r, 0}, ir);
      ir = ir * ParamPoly::i();
    }
    row.push_back(top);
    const ParamPoly minus_i = -ParamPoly::i();
    for (int k = 1; k <= 2 * n; ++k) {
      // e- = ad_x - i ad_y
      row.push_back(ad_gen('x', row.back()) + ad_gen('y', row.back()).scaled(minus_i));
    }
    it = rows.emplace(n, std::move(row)).first;
  }
  return it->second[static_cast<std::size_t>(n - m)];
}

SExpr nf_to_sexpr(const NormalForm& f) {
  SExpr out;
  const BasisDecomp d = decompose(f);
  for (const auto& [mode, c] : d.terms()) out += basis_sexpr(mode.n, mode.m).scaled(c);
  return out;
}

NormalForm sexpr_to_nf(const SExpr& s) {
  static std::mutex mu;
  static std::map<SIndex, NormalForm> cache;
  // Ssym(a,b,c) = x Ssym(a-1,b,c) + y Ssym(a,b-1,c) + z Ssym(a,b,c-1), by the first letter.
  std::function<NormalForm(const SIndex&)> image = [&](const SIndex& i) -> NormalForm {
    if (i.a < 0 || i.b < 0 || i.c < 0) return NormalForm();
    if (i.degree() == 0) return NormalForm(1);
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = cache.find(i);
      if (it != cache.end()) return it->second;
    }
    NormalForm v = nf_x() * image({i.a - 1, i.b, i.c}) + nf_y() * image({i.a, i.b - 1, i.c}) +
                   NormalForm::z() * image({i.a, i.b, i.c - 1});
    std::lock_guard<std::mutex> lock(mu);
    return cache.try_emplace(i, std::move(v)).first->second;
  };
  NormalForm out;
  for (const auto& [i, c] : s.terms()) out += image(i).scaled(c);
  return out;
}

}  // namespace fuzzy
