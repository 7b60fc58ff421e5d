#include "fuzzy/rewrite.h"

#include <mutex>
#include <random>
#include <vector>

#include "fuzzy/error.h"

namespace fuzzy {

namespace {

enum class Rule { ZJp, JmZ, JmJp, JpZsJm };

struct Redex {
  Rule rule;
  std::size_t begin;
  std::size_t end;  // one past the last letter
};

void collect_redexes(const Word& w, std::vector<Redex>& out, bool first_only) {
  out.clear();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const char a = w[i];
    const char b = w[i + 1];
    if (a == 'z' && b == 'p') {
      out.push_back({Rule::ZJp, i, i + 2});
    } else if (a == 'm' && b == 'z') {
      out.push_back({Rule::JmZ, i, i + 2});
    } else if (a == 'm' && b == 'p') {
      out.push_back({Rule::JmJp, i, i + 2});
    } else if (a == 'p') {
      std::size_t j = i + 1;
      while (j < w.size() && w[j] == 'z') ++j;
      if (j < w.size() && w[j] == 'm') out.push_back({Rule::JpZsJm, i, j + 1});
    }
    if (first_only && !out.empty()) return;
  }
}

// (u + k z - z^2)(z - k)^b
const ZPoly& jp_zs_jm(std::size_t b) {
  static std::mutex mutex;
  static std::map<std::size_t, ZPoly> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(b);
  if (it != cache.end()) return it->second;
  ZPoly base(std::vector<ParamPoly>{ParamPoly::u(), ParamPoly::kappa(), ParamPoly(-1)});
  ZPoly shift(std::vector<ParamPoly>{-ParamPoly::kappa(), ParamPoly(1)});
  return cache.emplace(b, base * pow(shift, static_cast<unsigned>(b))).first->second;
}

struct Piece {
  Word middle;
  ParamPoly coeff;
};

void rule_output(const Redex& r, std::vector<Piece>& out) {
  out.clear();
  const ParamPoly k = ParamPoly::kappa();
  switch (r.rule) {
    case Rule::ZJp:
      out.push_back({"pz", ParamPoly(1)});
      out.push_back({"p", k});
      break;
    case Rule::JmZ:
      out.push_back({"zm", ParamPoly(1)});
      out.push_back({"m", k});
      break;
    case Rule::JmJp:
      out.push_back({"", ParamPoly::u()});
      out.push_back({"z", -k});
      out.push_back({"zz", ParamPoly(-1)});
      break;
    case Rule::JpZsJm: {
      const ZPoly& poly = jp_zs_jm(r.end - r.begin - 2);
      for (int j = 0; j <= poly.degree(); ++j) {
        if (!poly.coeff(j).is_zero()) out.push_back({Word(static_cast<std::size_t>(j), 'z'), poly.coeff(j)});
      }
      break;
    }
  }
}

NormalForm from_irreducible(const std::map<Word, ParamPoly>& words) {
  NormalForm nf;
  for (const auto& [w, c] : words) {
    int a = 0;
    int b = 0;
    int cc = 0;
    for (char ch : w) {
      if (ch == 'p') ++a;
      if (ch == 'z') ++b;
      if (ch == 'm') ++cc;
    }
    nf += NormalForm::monomial({a, b, cc}, c);
  }
  return nf;
}

}  // namespace

RewriteResult normalize_counted(const FreeElement& input, const RewriteOptions& options) {
  const FreeElement f = input.alphabet() == Alphabet::Cartesian ? to_ladder(input) : input;
  std::mt19937_64 rng(options.seed);
  std::vector<std::pair<Word, ParamPoly>> stack(f.terms().begin(), f.terms().end());
  std::map<Word, ParamPoly> irreducible;
  std::vector<Redex> redexes;
  std::vector<Piece> pieces;
  RewriteResult result;

  const bool first_only = options.choice == RedexChoice::Leftmost;
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    collect_redexes(w, redexes, first_only);
    if (redexes.empty()) {
      auto [it, inserted] = irreducible.try_emplace(w, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) irreducible.erase(it);
      }
      continue;
    }
    const Redex& r = first_only ? redexes.front()
                                : redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
    ++result.steps;
    if (options.step_limit && result.steps > *options.step_limit) {
      throw Error("StepLimit", "rewrite step limit exceeded");
    }
    rule_output(r, pieces);
    const Word prefix = w.substr(0, r.begin);
    const Word suffix = w.substr(r.end);
    for (const Piece& p : pieces) stack.emplace_back(prefix + p.middle + suffix, c * p.coeff);
  }
  result.normal_form = from_irreducible(irreducible);
  return result;
}

}  // namespace fuzzy
