#include "fuzzy/free_element.h"

#include <cctype>

#include "fuzzy/error.h"

namespace fuzzy {

Alphabet alphabet_of(const Word& w) {
  bool cart = false;
  bool ladder = false;
  for (char c : w) {
    if (c == 'x' || c == 'y') cart = true;
    if (c == 'p' || c == 'm') ladder = true;
  }
  if (cart && ladder) throw Error("MixedAlphabet", "word mixes x/y with Jp/Jm");
  if (cart) return Alphabet::Cartesian;
  if (ladder) return Alphabet::Ladder;
  return Alphabet::Neutral;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (char c : w) {
    if (!out.empty()) out += "*";
    switch (c) {
      case 'p': out += "Jp"; break;
      case 'm': out += "Jm"; break;
      default: out += c;
    }
  }
  return out;
}

FreeElement::FreeElement(const ParamPoly& scalar) {
  if (!scalar.is_zero()) terms_.emplace(Word{}, scalar);
}

FreeElement FreeElement::word(const Word& w, const ParamPoly& coeff) {
  FreeElement f;
  f.add(w, coeff);
  return f;
}

Alphabet FreeElement::alphabet() const {
  Alphabet seen = Alphabet::Neutral;
  for (const auto& [w, c] : terms_) {
    Alphabet a = alphabet_of(w);
    if (a == Alphabet::Neutral) continue;
    if (seen != Alphabet::Neutral && seen != a) {
      throw Error("MixedAlphabet", "element mixes x/y with Jp/Jm");
    }
    seen = a;
  }
  return seen;
}

int FreeElement::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

void FreeElement::add(const Word& w, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FreeElement FreeElement::operator-() const { return scaled(ParamPoly(-1)); }

FreeElement FreeElement::scaled(const ParamPoly& c) const {
  FreeElement r;
  for (const auto& [w, v] : terms_) r.add(w, v * c);
  return r;
}

std::string FreeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (!w.empty()) out += "*" + word_to_string(w);
  }
  return out;
}

FreeElement mul_free(const FreeElement& f, const FreeElement& g) {
  Alphabet a = f.alphabet();
  Alphabet b = g.alphabet();
  if (a != Alphabet::Neutral && b != Alphabet::Neutral && a != b) {
    throw Error("MixedAlphabet", "product mixes x/y with Jp/Jm");
  }
  FreeElement r;
  for (const auto& [wf, cf] : f.terms()) {
    for (const auto& [wg, cg] : g.terms()) r.add(wf + wg, cf * cg);
  }
  return r;
}

FreeElement dagger_free(const FreeElement& f) {
  FreeElement r;
  for (const auto& [w, c] : f.terms()) {
    Word rev(w.rbegin(), w.rend());
    for (char& ch : rev) {
      if (ch == 'p') {
        ch = 'm';
      } else if (ch == 'm') {
        ch = 'p';
      }
    }
    r.add(rev, c.conj());
  }
  return r;
}

FreeElement to_ladder(const FreeElement& f) {
  const ParamPoly half(GaussRational(frac(1, 2)));
  const ParamPoly minus_half_i(GaussRational(Rational(0), frac(-1, 2)));
  // x = (Jp + Jm)/2, y = (Jp - Jm)/(2i) = -i/2 Jp + i/2 Jm
  const FreeElement x = FreeElement::word("p", half) + FreeElement::word("m", half);
  const FreeElement y = FreeElement::word("p", minus_half_i) - FreeElement::word("m", minus_half_i);
  FreeElement r;
  for (const auto& [w, c] : f.terms()) {
    FreeElement acc(c);
    for (char ch : w) {
      if (ch == 'x') {
        acc = mul_free(acc, x);
      } else if (ch == 'y') {
        acc = mul_free(acc, y);
      } else {
        acc = mul_free(acc, FreeElement::generator(ch));
      }
    }
    r += acc;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power ('*' power)*
//   power   := primary ('^' ['-'] integer)?
//   primary := number | atom | '(' expr ')'

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  FreeElement run() {
    FreeElement f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    f.alphabet();
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("SyntaxError", msg + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FreeElement expr() {
    FreeElement acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  FreeElement term() {
    FreeElement acc = power();
    while (accept('*')) acc = mul_free(acc, power());
    return acc;
  }

  long integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 6) fail("exponent too large");
    return std::stol(text_.substr(start, pos_ - start));
  }

  FreeElement power() {
    bool bare_r = false;
    FreeElement base = primary(bare_r);
    if (!accept('^')) {
      if (bare_r) fail("odd power of R (only R^2 = u is representable)");
      return base;
    }
    bool negative = accept('-');
    long e = integer();
    if (bare_r) {
      if (negative || e % 2 != 0) fail("odd or negative power of R");
      return FreeElement(ParamPoly::u(static_cast<int>(e / 2)));
    }
    if (negative) {
      // Only a single scalar kappa monomial may be inverted.
      if (base.terms().size() != 1 || !base.terms().begin()->first.empty()) {
        fail("negative power of a non-scalar");
      }
      const ParamPoly& c = base.terms().begin()->second;
      if (!c.is_monomial() || c.terms().begin()->first.u != 0) {
        fail("negative power of a non-monomial");
      }
      const auto& [exp, coeff] = *c.terms().begin();
      GaussRational inv = pow(GaussRational(1) / coeff, static_cast<unsigned>(e));
      return FreeElement(ParamPoly::monomial(inv, -exp.kappa * static_cast<int>(e), 0));
    }
    FreeElement r(ParamPoly(1));
    for (long i = 0; i < e; ++i) r = mul_free(r, base);
    return r;
  }

  FreeElement primary(bool& bare_r) {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FreeElement inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
      }
      return FreeElement(ParamPoly(parse_rational(text_.substr(start, pos_ - start))));
    }
    if (text_.compare(pos_, 2, "Jp") == 0) {
      pos_ += 2;
      return FreeElement::generator('p');
    }
    if (text_.compare(pos_, 2, "Jm") == 0) {
      pos_ += 2;
      return FreeElement::generator('m');
    }
    ++pos_;
    if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      --pos_;
      fail("unknown identifier");
    }
    switch (c) {
      case 'x':
      case 'y':
      case 'z': return FreeElement::generator(c);
      case 'i': return FreeElement(ParamPoly::i());
      case 'k': return FreeElement(ParamPoly::kappa());
      case 'u': return FreeElement(ParamPoly::u());
      case 'R': bare_r = true; return FreeElement();
      default: --pos_; fail("unknown symbol '" + std::string(1, c) + "'");
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

FreeElement parse(const std::string& text) { return Parser(text).run(); }

}  // namespace fuzzy
