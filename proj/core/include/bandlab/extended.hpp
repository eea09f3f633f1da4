#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bandlab/word.hpp"

namespace bandlab {

// Laurent polynomial over F2: the finite set of exponents whose coefficient
// is 1, kept sorted.  Addition is symmetric difference of supports.
class LaurentF2 {
 public:
  LaurentF2() = default;
  static LaurentF2 monomial(int exponent);
  // Duplicated exponents cancel in pairs (coefficients are mod 2).
  static LaurentF2 fromExponents(std::vector<int> exponents);

  const std::vector<int>& exponents() const { return exps_; }
  bool isZero() const { return exps_.empty(); }
  std::size_t termCount() const { return exps_.size(); }

  LaurentF2 operator+(const LaurentF2& other) const;
  LaurentF2 shifted(int k) const;         // multiply by x^k
  LaurentF2 timesOnePlusX(int e) const;   // multiply by (1+x)^e, e >= 0

  // Over F2 a Laurent polynomial is divisible by 1+x exactly when it has an
  // even number of terms (evaluate at x = 1).
  bool divisibleByOnePlusX() const { return exps_.size() % 2 == 0; }
  LaurentF2 dividedByOnePlusX() const;  // throws std::logic_error otherwise

  bool operator==(const LaurentF2&) const = default;

 private:
  std::vector<int> exps_;  // sorted, duplicate free
};

// Element of the extended group <x, a, t | a^2, [x, t], t^-1 a t = x^-1 a x a>,
// stored as nu * x^m * t^q.  The normal closure of a is the additive group of
// the localized ring F2[x^±1, (1+x)^-1]; nu is kept as the canonical fraction
// num / (1+x)^denpow with denpow = 0 or 1+x not dividing num.  Conjugation
// twists nu: x^m t^q acts on it by multiplication by x^(m+q) (1+x)^-q, which
// is what the three defining relations force once lamp position i is read as
// exponent i.
struct EElement {
  LaurentF2 num;
  int denpow = 0;
  int m = 0;  // image of x in the abelianization
  int q = 0;  // image of t

  static EElement identity() { return {}; }
  bool isIdentity() const { return num.isZero() && m == 0 && q == 0; }
  bool operator==(const EElement&) const = default;
};

EElement eMul(const EElement& lhs, const EElement& rhs);
EElement eInv(const EElement& p);

// Homomorphic evaluation over the alphabet a, x, X, t, T.
EElement eFromWord(const Word& w);

// (u v u^-1 v^-1)^2; the commutator lands in the exponent-2 kernel, so this
// is the identity for every pair.
EElement commutatorSquare(const EElement& u, const EElement& v);

// The (m, q) coordinates: the quotient onto Z x Z with kernel the normal
// closure of a.
std::pair<int, int> abelianImage(const EElement& p);

// JSON form {"num":[exponents...],"denpow":d,"m":m,"q":q}, emitted without
// whitespace, and its parser (std::invalid_argument on malformed input).
std::string toJsonText(const EElement& p);
EElement eFromJsonText(const std::string& text);

}  // namespace bandlab
