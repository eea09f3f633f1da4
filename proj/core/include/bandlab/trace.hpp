#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bandlab/lamp.hpp"
#include "bandlab/word.hpp"

namespace bandlab {

// Indices i, j commute in the level-n kernel when distinct and |i-j| <= n-1.
bool traceCommutes(int i, int j, int level);

// Word over indexed involutions, stored in canonical form: involution
// cancellation run to a fixed point, then the lexicographically least
// ordering reachable by adjacent commuting swaps.
class TraceWord {
 public:
  explicit TraceWord(int level);
  static TraceWord normalize(std::vector<int> gens, int level);

  const std::vector<int>& gens() const { return gens_; }
  int level() const { return level_; }
  bool empty() const { return gens_.empty(); }
  std::size_t size() const { return gens_.size(); }

  bool operator==(const TraceWord&) const = default;
  auto operator<=>(const TraceWord&) const = default;

 private:
  std::vector<int> gens_;
  int level_;
};

// Element of the degree-n approximation group, split as kernel part times
// a power of x.
struct G1Element {
  TraceWord kernelPart;
  int shift = 0;

  int level() const { return kernelPart.level(); }
  static G1Element identity(int level) { return {TraceWord(level), 0}; }

  bool operator==(const G1Element&) const = default;
};

G1Element g1FromWord(const Word& w, int level);
G1Element g1Mul(const G1Element& p, const G1Element& q);
G1Element g1Inv(const G1Element& p);
bool g1IsIdentity(const G1Element& p);

// Quotient map down to the lamplighter group: index i lights lamp i.
LampElement g1ToLamp(const G1Element& p);

// Image in the infinite dihedral group: z -> translation + (-1)^flip * z.
struct DihedralElement {
  int translation = 0;
  int flip = 0;

  bool isIdentity() const { return translation == 0 && flip == 0; }
  bool operator==(const DihedralElement&) const = default;
};

DihedralElement dihedralMul(const DihedralElement& p, const DihedralElement& q);

// Retraction killing every indexed involution except those at indices i and
// j; requires |i - j| >= level so the kernel relations are respected.
// A nonzero image certifies that w is not a relator consequence.
DihedralElement dinftyImage(const Word& w, int i, int j, int level);

std::string toJsonText(const G1Element& p);
G1Element g1FromJsonText(const std::string& text);

}  // namespace bandlab
