#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "bandlab/word.hpp"

namespace bandlab::testutil {

// Deterministic by default; override with BANDLAB_SEED for soak runs.
inline std::mt19937_64 makeRng(std::uint64_t salt = 0) {
  std::uint64_t seed = 20240915u;
  if (const char* env = std::getenv("BANDLAB_SEED")) seed = std::strtoull(env, nullptr, 10);
  return std::mt19937_64(seed ^ (salt * 0x9e3779b97f4a7c15ull));
}

inline Word randomLampWord(std::mt19937_64& rng, int maxLen) {
  static const char alphabet[] = {'a', 'x', 'X'};
  std::uniform_int_distribution<int> lenDist(0, maxLen);
  std::uniform_int_distribution<int> letterDist(0, 2);
  int len = lenDist(rng);
  std::string s;
  s.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) s += alphabet[letterDist(rng)];
  return Word::fromValid(std::move(s));
}

}  // namespace bandlab::testutil
