#pragma once

#include <map>
#include <string>

#include "fuzzy/param_poly.h"

namespace fuzzy {

/// Letters of a word: 'x', 'y', 'z' (Cartesian alphabet) and 'p', 'm' for
/// J+ and J- (ladder alphabet). 'z' belongs to both alphabets.
using Word = std::string;

enum class Alphabet { Neutral, Cartesian, Ladder };

Alphabet alphabet_of(const Word& w);
std::string word_to_string(const Word& w);  // "Jp*Jp*z", "1" for the empty word

/// Linear combination of noncommutative words with ParamPoly coefficients.
class FreeElement {
 public:
  using Terms = std::map<Word, ParamPoly>;

  FreeElement() = default;
  FreeElement(const ParamPoly& scalar);  // NOLINT
  static FreeElement word(const Word& w, const ParamPoly& coeff = ParamPoly(1));
  static FreeElement generator(char letter) { return word(Word(1, letter)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Alphabet alphabet() const;  // throws MixedAlphabet
  int degree() const;         // longest word; -1 for zero

  void add(const Word& w, const ParamPoly& c);

  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  FreeElement operator-() const;
  FreeElement scaled(const ParamPoly& c) const;

  friend bool operator==(const FreeElement&, const FreeElement&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Word-concatenation product. Throws MixedAlphabet.
FreeElement mul_free(const FreeElement& f, const FreeElement& g);
inline FreeElement operator*(const FreeElement& f, const FreeElement& g) { return mul_free(f, g); }

/// Reverses words, conjugates coefficients, swaps J+ and J-.
FreeElement dagger_free(const FreeElement& f);

/// Substitutes x = (J+ + J-)/2 and y = (J+ - J-)/(2i).
FreeElement to_ladder(const FreeElement& f);

/// Parses the ASCII expression grammar: atoms x y z Jp Jm i k R u,
/// rationals a/b, operators + - * ^ and parentheses. Throws SyntaxError
/// (with position) and MixedAlphabet.
FreeElement parse(const std::string& text);

}  // namespace fuzzy
