#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "bandlab/lamp.hpp"
#include "bandlab/trace.hpp"
#include "bandlab/word.hpp"

namespace {

bandlab::Word pseudorandomWord(int length) {
  static const char alphabet[] = {'a', 'x', 'X'};
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> letter(0, 2);
  std::string s;
  s.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) s += alphabet[letter(rng)];
  return bandlab::Word::fromValid(std::move(s));
}

void BM_LampEval(benchmark::State& state) {
  bandlab::Word w = pseudorandomWord(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bandlab::evalWord(w));
  }
}

void BM_NormalForm(benchmark::State& state) {
  bandlab::Word w = pseudorandomWord(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bandlab::g1FromWord(w, 2));
  }
}

void BM_DihedralImage(benchmark::State& state) {
  bandlab::Word w = pseudorandomWord(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bandlab::dinftyImage(w, 0, -2, 2));
  }
}

}  // namespace

BENCHMARK(BM_LampEval)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_NormalForm)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_DihedralImage)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK_MAIN();
