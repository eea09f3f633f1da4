#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "bandlab/lamp.hpp"
#include "bandlab/trace.hpp"
#include "bandlab/word.hpp"
#include "test_util.hpp"

using namespace bandlab;

namespace {

// Oracle for the dihedral images: compose 2x2-style actions z -> t ± z by
// direct function application on a probe point pair, not the (t, f) pairs.
struct AffineOracle {
  // action on 0 and 1 determines the element
  long at0 = 0, at1 = 1;
  void applyReflectionAbout(long c) {  // z -> 2c - z
    at0 = 2 * c - at0;
    at1 = 2 * c - at1;
  }
};

DihedralElement oracleImage(const Word& w, int i, int j) {
  // r_i is the reflection about 0; r_j the reflection about 1/2 (tracked
  // with doubled coordinates to stay integral).
  std::vector<long> mirrors;  // doubled mirror coordinates, reading order
  int c = 0;
  for (char ch : w.str()) {
    if (ch == 'x') ++c;
    else if (ch == 'X') --c;
    else if (ch == 'a') {
      if (c == i) mirrors.push_back(0);
      else if (c == j) mirrors.push_back(1);
    }
  }
  // The word acts as the composite with the first letter outermost, so
  // build the function by wrapping reflections from the last letter out.
  long at0 = 0, at1 = 2;  // images of the probe points 0 and 1, doubled
  for (auto it = mirrors.rbegin(); it != mirrors.rend(); ++it) {
    at0 = 2 * *it - at0;
    at1 = 2 * *it - at1;
  }
  // Recover (translation, flip) from the doubled action.
  int flip = (at1 - at0 == 2) ? 0 : 1;
  return DihedralElement{static_cast<int>(at0 / 2), flip};
}

std::vector<int> randomIndexSeq(std::mt19937_64& rng, int len, int span) {
  std::uniform_int_distribution<int> d(-span, span);
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) v.push_back(d(rng));
  return v;
}

}  // namespace

TEST_CASE("commutation range") {
  CHECK_FALSE(traceCommutes(0, 0, 5));
  CHECK(traceCommutes(0, 1, 2));
  CHECK_FALSE(traceCommutes(0, 2, 2));
  CHECK(traceCommutes(0, 2, 3));
  CHECK_FALSE(traceCommutes(0, 1, 1));
}

TEST_CASE("normalization cancels and sorts commuting letters") {
  CHECK(TraceWord::normalize({5, 5}, 2).empty());
  CHECK(TraceWord::normalize({3, 1, 3}, 3).gens() == std::vector<int>{1});
  CHECK(TraceWord::normalize({2, 0}, 3).gens() == std::vector<int>{0, 2});
  // blocked: distance 2 letters do not commute at level 2
  CHECK(TraceWord::normalize({2, 0}, 2).gens() == std::vector<int>{2, 0});
  CHECK(TraceWord::normalize({0, 2, 0, 2}, 2).gens() ==
        std::vector<int>{0, 2, 0, 2});
}

TEST_CASE("normal form is invariant under legal adjacent swaps") {
  auto rng = testutil::makeRng(10);
  std::uniform_int_distribution<int> levelDist(1, 4);
  for (int trial = 0; trial < 400; ++trial) {
    int level = levelDist(rng);
    std::vector<int> seq = randomIndexSeq(rng, 14, 5);
    TraceWord base = TraceWord::normalize(seq, level);
    // Random walk of legal swaps applied to the raw sequence.
    std::vector<int> shuffled = seq;
    std::uniform_int_distribution<std::size_t> pos(0, shuffled.size() - 2);
    for (int s = 0; s < 60; ++s) {
      std::size_t p = pos(rng);
      if (traceCommutes(shuffled[p], shuffled[p + 1], level))
        std::swap(shuffled[p], shuffled[p + 1]);
    }
    CHECK(TraceWord::normalize(shuffled, level) == base);
  }
}

TEST_CASE("normal form is invariant under involution insertion") {
  auto rng = testutil::makeRng(11);
  std::uniform_int_distribution<int> levelDist(1, 4);
  std::uniform_int_distribution<int> gen(-5, 5);
  for (int trial = 0; trial < 400; ++trial) {
    int level = levelDist(rng);
    std::vector<int> seq = randomIndexSeq(rng, 10, 5);
    TraceWord base = TraceWord::normalize(seq, level);
    std::vector<int> padded = seq;
    std::uniform_int_distribution<std::size_t> pos(0, padded.size());
    std::size_t p = pos(rng);
    int g = gen(rng);
    padded.insert(padded.begin() + static_cast<std::ptrdiff_t>(p), {g, g});
    CHECK(TraceWord::normalize(padded, level) == base);
  }
}

TEST_CASE("scan of words") {
  CHECK(g1FromWord(Word::parse("xxxxx"), 2) ==
        G1Element{TraceWord(2), 5});
  CHECK(g1IsIdentity(g1FromWord(Word::parse("aa"), 3)));
  CHECK_THROWS_AS(g1FromWord(Word::parse("t"), 2), std::invalid_argument);
}

TEST_CASE("relators below the level vanish, the level relator does not") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(g1IsIdentity(g1FromWord(relator(k), n)));
      // conjugates of relators also vanish
      Word conj = powerWord('x', -k) + relator(k) + powerWord('x', k);
      CHECK(g1IsIdentity(g1FromWord(conj, n)));
    }
    G1Element top = g1FromWord(relator(n), n);
    CHECK_FALSE(g1IsIdentity(top));
    CHECK(top.shift == 0);
    CHECK(top.kernelPart.gens() == std::vector<int>{0, -n, 0, -n});
  }
}

TEST_CASE("commutator of close indices vanishes, far indices survive") {
  // [a_i, a_j] as a word: (x^i a x^-i)(x^j a x^-j)(x^i a x^-i)(x^j a x^-j)
  auto commutatorWord = [](int i, int j) {
    Word bi = powerWord('x', i) + Word::parse("a") + powerWord('x', -i);
    Word bj = powerWord('x', j) + Word::parse("a") + powerWord('x', -j);
    return bi + bj + bi + bj;
  };
  CHECK(g1IsIdentity(g1FromWord(commutatorWord(2, 3), 2)));
  CHECK(g1IsIdentity(g1FromWord(commutatorWord(-1, 1), 3)));
  CHECK_FALSE(g1IsIdentity(g1FromWord(commutatorWord(0, 2), 2)));
  CHECK_FALSE(g1IsIdentity(g1FromWord(commutatorWord(0, 3), 3)));
}

TEST_CASE("group laws and homomorphism property") {
  auto rng = testutil::makeRng(12);
  std::uniform_int_distribution<int> levelDist(1, 4);
  for (int trial = 0; trial < 2000; ++trial) {
    int level = levelDist(rng);
    Word u = testutil::randomLampWord(rng, 14);
    Word v = testutil::randomLampWord(rng, 14);
    G1Element pu = g1FromWord(u, level);
    G1Element pv = g1FromWord(v, level);
    CHECK(g1Mul(pu, pv) == g1FromWord(u + v, level));
    CHECK(g1IsIdentity(g1Mul(pu, g1Inv(pu))));
    CHECK(g1IsIdentity(g1Mul(g1Inv(pu), pu)));
    CHECK(pu.shift + pv.shift == g1Mul(pu, pv).shift);
  }
  CHECK_THROWS_AS(g1Mul(G1Element::identity(2), G1Element::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("quotient to the lamplighter commutes with evaluation") {
  auto rng = testutil::makeRng(13);
  std::uniform_int_distribution<int> levelDist(1, 4);
  for (int trial = 0; trial < 2000; ++trial) {
    int level = levelDist(rng);
    Word w = testutil::randomLampWord(rng, 30);
    CHECK(g1ToLamp(g1FromWord(w, level)) == evalWord(w));
  }
  // both copies of each index cancel in the abelianised-lamp image
  G1Element top = g1FromWord(relator(2), 2);
  CHECK(g1ToLamp(top).isIdentity());
}

TEST_CASE("dihedral composition law") {
  DihedralElement ri{0, 1}, rj{1, 1};
  CHECK(dihedralMul(ri, ri) == DihedralElement{0, 0});
  CHECK(dihedralMul(rj, rj) == DihedralElement{0, 0});
  DihedralElement prod = dihedralMul(ri, rj);
  CHECK(prod.flip == 0);
  CHECK(prod.translation != 0);
  DihedralElement sq = dihedralMul(prod, prod);
  CHECK(sq.translation == 2 * prod.translation);
}

TEST_CASE("dihedral image certifies the level relator as nontrivial") {
  for (int n = 1; n <= 5; ++n) {
    DihedralElement img = dinftyImage(relator(n), 0, -n, n);
    CHECK(img.flip == 0);
    CHECK(img.translation != 0);
    // relators inside the family map to the identity
    for (int k = 0; k <= n - 1; ++k)
      CHECK(dinftyImage(relator(k), 0, -n, n).isIdentity());
  }
  CHECK(dinftyImage(Word::parse(""), 0, 2, 2).isIdentity());
  CHECK_THROWS_AS(dinftyImage(Word::parse("a"), 0, 1, 2),
                  std::invalid_argument);
}

TEST_CASE("dihedral image matches the reflection oracle") {
  auto rng = testutil::makeRng(14);
  std::uniform_int_distribution<int> iDist(-3, 3);
  std::uniform_int_distribution<int> gap(2, 5);
  for (int trial = 0; trial < 1500; ++trial) {
    Word w = testutil::randomLampWord(rng, 25);
    int i = iDist(rng);
    int j = i + gap(rng);
    int level = 2;
    CHECK(dinftyImage(w, i, j, level) == oracleImage(w, i, j));
  }
}

TEST_CASE("nonzero dihedral image implies nontrivial group element") {
  auto rng = testutil::makeRng(15);
  std::uniform_int_distribution<int> iDist(-4, 4);
  for (int trial = 0; trial < 2000; ++trial) {
    int level = 1 + static_cast<int>(trial % 3);
    Word w = testutil::randomLampWord(rng, 22);
    int i = iDist(rng);
    int j = i + level + static_cast<int>(trial % 2);
    if (!dinftyImage(w, i, j, level).isIdentity())
      CHECK_FALSE(g1IsIdentity(g1FromWord(w, level)));
  }
}

TEST_CASE("json round trip") {
  G1Element p = g1FromWord(Word::parse("aXXaxxxa"), 2);
  std::string js = toJsonText(p);
  CHECK(js == R"({"level":2,"shift":1,"kernel":[0,-2,1]})");
  CHECK(g1FromJsonText(js) == p);
  CHECK_THROWS_AS(g1FromJsonText(R"({"level":2,"shift":0,"kernel":[5,5]})"),
                  std::invalid_argument);
}
