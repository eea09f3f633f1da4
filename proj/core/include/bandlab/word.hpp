#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bandlab {

// Words over the generating sets {a, x} (lamplighter) and {a, x, t}
// (extended lamplighter).  One char per letter:
//
//   'a'  the involutive lamp generator; 'A' is accepted on input and
//        normalised to 'a' (a = a^-1), so stored words never contain 'A'
//   'x'  the walker generator, 'X' its inverse
//   't'  the stretching generator, 'T' its inverse
//
// Storage is a plain validated string.  No free reduction happens
// implicitly anywhere; see reduced() for the explicit one.
class Word {
 public:
  Word() = default;

  // Validates and normalises ('A' -> 'a').  Whitespace is ignored.
  // Throws std::invalid_argument on any other character.
  static Word parse(std::string_view text);

  // Like parse but the input must already be in stored form.
  static Word fromValid(std::string letters);

  const std::string& str() const { return s_; }
  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  char at(std::size_t i) const { return s_[i]; }

  // Formal inverse: reversed, x<->X and t<->T swapped, 'a' fixed.
  Word inverse() const;

  // Free reduction of the invertible letters only: cancels adjacent
  // xX/Xx and tT/Tt pairs to a fixed point.  Adjacent "aa" is *not*
  // cancelled here; killing an a-pair is the job of an a^2 cell.
  Word reduced() const;

  Word operator+(const Word& other) const { return fromValid(s_ + other.s_); }
  bool operator==(const Word& other) const = default;
  auto operator<=>(const Word& other) const = default;

  bool usesOnlyLampAlphabet() const;  // no t/T letters

  static char inverseLetter(char c);
  static bool cancels(char lhs, char rhs);  // xX, Xx, tT, Tt

 private:
  std::string s_;
};

// Exponent sum of the x letters: 'x' counts +1, 'X' counts -1,
// everything else 0.
int xExponentSum(const Word& w);

// Repeated-letter convenience: powerWord('x', -3) == "XXX".
Word powerWord(char letter, int exponent);

// Expands caret powers in command line word syntax, e.g.
// "ax^-2ax^2" -> "aXXaxx".  Only letter^integer is supported.
std::string expandPowers(std::string_view text);

}  // namespace bandlab
