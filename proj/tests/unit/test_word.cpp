#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "bandlab/word.hpp"
#include "test_util.hpp"

using namespace bandlab;

TEST_CASE("parse normalizes a-inverse and skips whitespace") {
  CHECK(Word::parse("A x A").str() == "axa");
  CHECK(Word::parse("").str() == "");
  CHECK(Word::parse("aXxT t").str() == "aXxTt");
  CHECK_THROWS_AS(Word::parse("abc"), std::invalid_argument);
}

TEST_CASE("inverse reverses and swaps case, fixing a") {
  CHECK(Word::parse("ax").inverse().str() == "Xa");
  CHECK(Word::parse("xaT").inverse().str() == "taX");
  CHECK(Word::parse("").inverse().str() == "");
}

TEST_CASE("reduced cancels only x and t pairs, never aa") {
  CHECK(Word::parse("xX").reduced().str() == "");
  CHECK(Word::parse("axXa").reduced().str() == "aa");
  CHECK(Word::parse("aa").reduced().str() == "aa");
  CHECK(Word::parse("xaaX").reduced().str() == "xaaX");
  CHECK(Word::parse("tTxXxX").reduced().str() == "");
  CHECK(Word::parse("xXxXx").reduced().str() == "x");
}

TEST_CASE("reduction properties") {
  auto rng = testutil::makeRng(1);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = testutil::randomLampWord(rng, 12);
    Word r = w.reduced();
    // idempotent, no cancellable pair left, same group element
    CHECK(r.reduced() == r);
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      CHECK_FALSE(Word::cancels(r.at(i), r.at(i + 1)));
    CHECK(xExponentSum(r) == xExponentSum(w));
  }
  // with no a-letters in the way, w * w^-1 reduces away completely
  for (int trial = 0; trial < 100; ++trial) {
    std::string s;
    std::uniform_int_distribution<int> len(0, 10), bit(0, 1);
    int n = len(rng);
    for (int i = 0; i < n; ++i) s += bit(rng) ? 'x' : 'X';
    Word w = Word::fromValid(s);
    CHECK((w + w.inverse()).reduced().empty());
  }
}

TEST_CASE("x exponent sum") {
  CHECK(xExponentSum(Word::parse("")) == 0);
  CHECK(xExponentSum(Word::parse("aXXa")) == -2);
  CHECK(xExponentSum(Word::parse("xxXa")) == 1);
}

TEST_CASE("power word notation") {
  CHECK(powerWord('x', 3).str() == "xxx");
  CHECK(powerWord('x', -2).str() == "XX");
  CHECK(powerWord('x', 0).str() == "");
  CHECK(expandPowers("x^3aX^2") == "xxxaXX");
  CHECK(expandPowers("x^-2a") == "XXa");
  CHECK(expandPowers("axa") == "axa");
  CHECK_THROWS_AS(expandPowers("x^"), std::invalid_argument);
}

TEST_CASE("lamp alphabet detection") {
  CHECK(Word::parse("axX").usesOnlyLampAlphabet());
  CHECK_FALSE(Word::parse("axt").usesOnlyLampAlphabet());
}
