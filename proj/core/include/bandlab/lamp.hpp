#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bandlab/word.hpp"

namespace bandlab {

// An element of the lamplighter group Z2 wr Z: a finite set of lit lamp
// positions plus a walker shift.  `lamps` is kept sorted and duplicate
// free; that is the canonical form, so operator== is structural.
struct LampElement {
  std::vector<int> lamps;
  int shift = 0;

  static LampElement identity() { return {}; }
  bool isIdentity() const { return lamps.empty() && shift == 0; }
  bool operator==(const LampElement&) const = default;
  auto operator<=>(const LampElement&) const = default;
};

// Group law: lamps of the right factor are shifted by the left walker
// position before the symmetric difference is taken.
LampElement lampMul(const LampElement& p, const LampElement& q);
LampElement lampInv(const LampElement& p);

// Walker semantics, evaluated left to right: the walker starts at 0
// with all lamps off; 'a' toggles the lamp at the walker's position,
// 'x' moves +1, 'X' moves -1.  t/T letters are rejected.
LampElement evalWord(const Word& w);

// relator(k) = a x^-k a x^k a x^-k a x^k, the commutation relation of a
// with its k-fold shift, spelled with a^2 absorbed for k = 0 ("aa").
// Length 4k+4.  Negative k is rejected.
Word relator(int k);

// Canonical word for an element: toggle the lit lamps in increasing
// position order, then walk to the shift.  evalWord(normalWord(p)) == p.
Word normalWord(const LampElement& p);

// Text form "lamps=[i1,i2,...];shift=m" and its parser.
std::string toText(const LampElement& p);
LampElement lampFromText(const std::string& text);

// JSON form {"lamps":[...],"shift":m}, emitted without whitespace so
// exports are byte-stable.
std::string toJsonText(const LampElement& p);

struct LampHash {
  std::size_t operator()(const LampElement& p) const;
};

}  // namespace bandlab
