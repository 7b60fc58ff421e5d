#include "fuzzy/matrep.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "json.hpp"

#include "fuzzy/error.h"
#include "fuzzy/rewrite.h"

namespace fuzzy {

MatrixRep::MatrixRep(int n) : n_(n) {
  if (n < 1) throw Error("DomainError", "representation dimension must be >= 1");
}

MatrixRep MatrixRep::identity(int n) {
  MatrixRep m(n);
  m.diags_[0] = std::vector<GaussRational>(static_cast<std::size_t>(n), GaussRational(1));
  return m;
}

GaussRational MatrixRep::at(int row, int col) const {
  auto it = diags_.find(row - col);
  return it == diags_.end() ? GaussRational(0) : it->second[static_cast<std::size_t>(col)];
}

void MatrixRep::add(int row, int col, const GaussRational& v) {
  if (row < 0 || row >= n_ || col < 0 || col >= n_) throw Error("DomainError", "matrix index out of range");
  if (v.is_zero()) return;
  auto& d = diags_[row - col];
  if (d.empty()) d.resize(static_cast<std::size_t>(n_));
  d[static_cast<std::size_t>(col)] += v;
}

void MatrixRep::prune() {
  for (auto it = diags_.begin(); it != diags_.end();) {
    bool zero = true;
    for (const auto& v : it->second) zero = zero && v.is_zero();
    it = zero ? diags_.erase(it) : std::next(it);
  }
}

MatrixRep& MatrixRep::operator+=(const MatrixRep& o) {
  for (const auto& [s, d] : o.diags_) {
    auto& mine = diags_[s];
    if (mine.empty()) mine.resize(static_cast<std::size_t>(n_));
    for (std::size_t c = 0; c < d.size(); ++c) mine[c] += d[c];
  }
  prune();
  return *this;
}

MatrixRep& MatrixRep::operator-=(const MatrixRep& o) { return *this += o.scaled(GaussRational(-1)); }

MatrixRep operator*(const MatrixRep& a, const MatrixRep& b) {
  if (a.n_ != b.n_) throw Error("DomainError", "dimension mismatch");
  MatrixRep out(a.n_);
  for (const auto& [sb, db] : b.diags_) {
    for (const auto& [sa, da] : a.diags_) {
      const int s = sa + sb;
      if (std::abs(s) >= a.n_) continue;
      std::vector<GaussRational>* target = nullptr;
      for (int c = 0; c < a.n_; ++c) {
        const int k = c + sb;
        if (k < 0 || k >= a.n_ || k + sa < 0 || k + sa >= a.n_) continue;
        const GaussRational& x = db[static_cast<std::size_t>(c)];
        const GaussRational& y = da[static_cast<std::size_t>(k)];
        if (x.is_zero() || y.is_zero()) continue;
        if (!target) {
          target = &out.diags_[s];
          if (target->empty()) target->resize(static_cast<std::size_t>(a.n_));
        }
        (*target)[static_cast<std::size_t>(c)] += y * x;
      }
    }
  }
  out.prune();
  return out;
}

MatrixRep MatrixRep::scaled(const GaussRational& c) const {
  MatrixRep out(n_);
  if (c.is_zero()) return out;
  out.diags_ = diags_;
  for (auto& [s, d] : out.diags_)
    for (auto& v : d) v *= c;
  return out;
}

GaussRational MatrixRep::trace() const {
  GaussRational t;
  auto it = diags_.find(0);
  if (it != diags_.end())
    for (const auto& v : it->second) t += v;
  return t;
}

bool MatrixRep::is_zero() const {
  for (const auto& [s, d] : diags_)
    for (const auto& v : d)
      if (!v.is_zero()) return false;
  return true;
}

bool operator==(const MatrixRep& a, const MatrixRep& b) {
  if (a.n_ != b.n_) return false;
  // Diagonals may be stored with only zero entries; compare values.
  return (a - b).is_zero();
}

std::vector<std::vector<GaussRational>> MatrixRep::dense() const {
  std::vector<std::vector<GaussRational>> out(static_cast<std::size_t>(n_), std::vector<GaussRational>(static_cast<std::size_t>(n_)));
  for (const auto& [s, d] : diags_)
    for (int c = 0; c < n_; ++c)
      if (c + s >= 0 && c + s < n_) out[static_cast<std::size_t>(c + s)][static_cast<std::size_t>(c)] = d[static_cast<std::size_t>(c)];
  return out;
}

Rational rep_u(int N) { return frac(static_cast<long>(N) * N - 1, 4); }

MatrixRep jp_matrix(int N) {
  MatrixRep m(N);
  for (int r = 0; r + 1 < N; ++r) m.add(r + 1, r, r + 1);
  return m;
}

MatrixRep jm_matrix(int N) {
  MatrixRep m(N);
  for (int r = 1; r < N; ++r) m.add(r - 1, r, N - r);
  return m;
}

MatrixRep z_matrix(int N) {
  MatrixRep m(N);
  for (int r = 0; r < N; ++r) m.add(r, r, GaussRational(Rational(r) - frac(N - 1, 2)));
  return m;
}

namespace {

GaussRational eval_zpoly(const std::vector<GaussRational>& coeffs, const Rational& z) {
  GaussRational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * GaussRational(z) + *it;
  return acc;
}

}  // namespace

MatrixRep phi_N(const NormalForm& f, int N) {
  MatrixRep out(N);
  const Rational u = rep_u(N);
  const Rational h = frac(N - 1, 2);
  for (const auto& [m, p] : f.sectors()) {
    std::vector<GaussRational> coeffs;
    for (const auto& c : p.coeffs()) coeffs.push_back(c.eval(1, u));
    for (int r = 0; r < N; ++r) {
      if (m >= 0) {
        // J+^m p(z) v_r
        if (r + m >= N) continue;
        Rational ladder(1);
        for (int j = 1; j <= m; ++j) ladder *= r + j;
        out.add(r + m, r, eval_zpoly(coeffs, Rational(r) - h) * GaussRational(ladder));
      } else {
        // p(z) J-^c v_r
        const int c = -m;
        if (r - c < 0) continue;
        Rational ladder(1);
        for (int j = 0; j < c; ++j) ladder *= N - r + j;
        out.add(r - c, r, eval_zpoly(coeffs, Rational(r - c) - h) * GaussRational(ladder));
      }
    }
  }
  return out;
}

MatrixRep phi_N(const FreeElement& f, int N) {
  const FreeElement ladder = f.alphabet() == Alphabet::Cartesian ? to_ladder(f) : f;
  const Rational u = rep_u(N);
  const Rational h = frac(N - 1, 2);
  MatrixRep out(N);
  for (const auto& [w, c] : ladder.terms()) {
    const GaussRational coeff = c.eval(1, u);
    for (int r0 = 0; r0 < N; ++r0) {
      int r = r0;
      Rational scale(1);
      for (auto it = w.rbegin(); it != w.rend() && sgn(scale) != 0; ++it) {
        switch (*it) {
          case 'p':
            scale *= r + 1;
            if (++r >= N) scale = 0;
            break;
          case 'm':
            scale *= N - r;
            if (--r < 0) scale = 0;
            break;
          default:
            scale *= Rational(r) - h;
        }
      }
      if (sgn(scale) != 0) out.add(r, r0, coeff * GaussRational(scale));
    }
  }
  return out;
}

GaussRational pi0_trace(const NormalForm& f, int N) { return phi_N(f, N).trace() / GaussRational(N); }

ParamPoly nu_via_trace(int n) {
  if (n < 0) throw Error("DomainError", "negative degree");
  const NormalForm jj = NormalForm::jm(n) * NormalForm::jp(n);
  std::vector<std::pair<Rational, GaussRational>> samples;
  for (int N = 1; N <= n + 2; ++N) samples.emplace_back(rep_u(N), pi0_trace(jj, N));
  return weight_lift(poly_interpolate(samples, n), 2 * n, 0);
}

namespace {

// Basis images at kappa = 1 for one N: T^m_n for n < N (zero otherwise).
class BasisImages {
 public:
  explicit BasisImages(int N) : N_(N), jm_(jm_matrix(N)) {}

  const MatrixRep& get(int n, int m) {
    auto it = rows_.find(n);
    if (it == rows_.end()) {
      std::vector<MatrixRep> row;
      MatrixRep top = MatrixRep::identity(N_);
      const MatrixRep jp = jp_matrix(N_);
      for (int i = 0; i < n; ++i) top = jp * top;
      row.push_back(top);
      for (int k = 1; k <= 2 * n; ++k) row.push_back(jm_ * row.back() - row.back() * jm_);
      it = rows_.emplace(n, std::move(row)).first;
    }
    return it->second[static_cast<std::size_t>(n - m)];
  }

 private:
  int N_;
  MatrixRep jm_;
  std::map<int, std::vector<MatrixRep>> rows_;
};

// tr(A B) where A lives on diagonal -m and only diagonal m of B contributes.
GaussRational pair_trace(const MatrixRep& a, const MatrixRep& b) {
  GaussRational t;
  for (const auto& [sa, da] : a.diagonals()) {
    auto it = b.diagonals().find(-sa);
    if (it == b.diagonals().end()) continue;
    const auto& db = it->second;
    for (int c = 0; c < a.dim(); ++c) {
      const int k = c - sa;  // column of a at row c
      if (k < 0 || k >= a.dim()) continue;
      t += da[static_cast<std::size_t>(k)] * db[static_cast<std::size_t>(c)];
    }
  }
  return t;
}

// A weight-homogeneous component: the set of (n, m) it can touch, its
// degree bound, and a way to produce phi_N.
struct Component {
  int weight = 0;
  int total_degree = 0;          // max of letters + 2 * u-exponent
  std::map<int, int> max_n;      // sector m -> largest n that can appear
  std::function<MatrixRep(int)> image;
};

BasisDecomp decompose_components(const std::vector<Component>& comps) {
  BasisDecomp out;
  std::map<int, BasisImages> images;
  auto basis_image = [&](int N, int n, int m) -> const MatrixRep& {
    return images.try_emplace(N, N).first->second.get(n, m);
  };
  for (const Component& comp : comps) {
    std::map<int, MatrixRep> phi;
    auto phi_at = [&](int N) -> const MatrixRep& {
      auto it = phi.find(N);
      if (it == phi.end()) it = phi.emplace(N, comp.image(N)).first;
      return it->second;
    };
    for (const auto& [m, top] : comp.max_n) {
      for (int n = std::abs(m); n <= top; ++n) {
        if (comp.total_degree < n) continue;
        const int bound = (comp.total_degree - n) / 2;
        std::vector<std::pair<Rational, GaussRational>> samples;
        for (int N = n + 1; N <= n + bound + 2; ++N) {
          const MatrixRep& dual = basis_image(N, n, -m);
          const GaussRational norm = pair_trace(dual, basis_image(N, n, m));
          if (norm.is_zero()) throw Error("DegenerateNorm", "vanishing trace norm");
          samples.emplace_back(rep_u(N), pair_trace(dual, phi_at(N)) / norm);
        }
        const UPoly q = poly_interpolate(samples, bound);
        out.add({n, m}, weight_lift(q, comp.weight, 2 * n - m));
      }
    }
  }
  return out;
}

}  // namespace

BasisDecomp decompose_fast(const NormalForm& f) {
  std::vector<Component> comps;
  for (const auto& [w, part] : split_by_weight(f)) {
    Component c;
    c.weight = w;
    for (const auto& [m, p] : part.sectors()) {
      c.max_n[m] = std::abs(m) + p.degree();
      for (int b = 0; b <= p.degree(); ++b) {
        const ParamPoly& coeff = p.coeff(b);
        if (!coeff.is_zero()) c.total_degree = std::max(c.total_degree, std::abs(m) + b + 2 * coeff.max_u_exp());
      }
    }
    c.image = [part = part](int N) { return phi_N(part, N); };
    comps.push_back(std::move(c));
  }
  return decompose_components(comps);
}

BasisDecomp decompose_fast(const FreeElement& f) {
  const FreeElement ladder = f.alphabet() == Alphabet::Cartesian ? to_ladder(f) : f;
  std::map<int, FreeElement> parts;
  for (const auto& [w, c] : ladder.terms())
    for (const auto& [cw, cc] : c.split_by_weight()) parts[cw + static_cast<int>(w.size())].add(w, cc);
  std::vector<Component> comps;
  for (const auto& [weight, part] : parts) {
    Component c;
    c.weight = weight;
    for (const auto& [w, coeff] : part.terms()) {
      const int len = static_cast<int>(w.size());
      const int m = static_cast<int>(std::count(w.begin(), w.end(), 'p') - std::count(w.begin(), w.end(), 'm'));
      int& top = c.max_n[m];
      top = std::max(top, len);
      c.total_degree = std::max(c.total_degree, len + 2 * coeff.max_u_exp());
    }
    c.image = [part = part](int N) { return phi_N(part, N); };
    comps.push_back(std::move(c));
  }
  return decompose_components(comps);
}

std::string BenchReport::to_json() const {
  nlohmann::ordered_json j;
  j["degree"] = degree;
  j["fast_ms"] = fast_ms;
  j["direct_ms"] = direct_ms ? nlohmann::ordered_json(*direct_ms) : nlohmann::ordered_json(nullptr);
  j["direct_rewrite_steps"] =
      direct_rewrite_steps ? nlohmann::ordered_json(*direct_rewrite_steps) : nlohmann::ordered_json(nullptr);
  j["agree"] = agree ? nlohmann::ordered_json(*agree) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

FreeElement random_dense_input(int degree, std::uint64_t seed, int terms) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(0, 2), num(-9, 9), den(1, 4);
  static const char kLetters[] = {'p', 'm', 'z'};
  FreeElement f;
  for (int t = 0; t < terms; ++t) {
    Word w;
    for (int i = 0; i < degree; ++i) w += kLetters[letter(rng)];
    int n = num(rng);
    if (n == 0) n = 1;
    f.add(w, ParamPoly(frac(n, den(rng))));
  }
  return f;
}

BenchReport bench_decompose(int degree, int trials, std::uint64_t seed, int direct_max_degree) {
  if (degree < 1 || trials < 1) throw Error("DomainError", "bench needs degree >= 1 and trials >= 1");
  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
  BenchReport report;
  report.degree = degree;
  const bool run_direct = degree <= direct_max_degree;
  if (run_direct) {
    report.direct_ms = 0;
    report.direct_rewrite_steps = 0;
    report.agree = true;
  }
  for (int t = 0; t < trials; ++t) {
    const FreeElement f = random_dense_input(degree, seed + static_cast<std::uint64_t>(t));
    auto t0 = Clock::now();
    BasisDecomp fast = decompose_fast(f);
    report.fast_ms += ms(Clock::now() - t0);
    if (!run_direct) continue;
    t0 = Clock::now();
    RewriteResult r = normalize_counted(f);
    BasisDecomp direct = decompose(r.normal_form);
    *report.direct_ms += ms(Clock::now() - t0);
    *report.direct_rewrite_steps += r.steps;
    *report.agree = *report.agree && direct == fast;
  }
  return report;
}

}  // namespace fuzzy
