#include <benchmark/benchmark.h>

#include "bandlab/fill.hpp"
#include "bandlab/lamp.hpp"
#include "bandlab/semistability.hpp"
#include "bandlab/word.hpp"

namespace {

// The backtracking pushout: the loop, pushed out and pulled straight back.
// Always fillable, with area growing with the push distance.
bandlab::Word controlPushout(int level, int push) {
  bandlab::Word alpha = bandlab::alphaLoop(level);
  bandlab::Word beta = bandlab::powerWord('x', -push) + alpha +
                       bandlab::powerWord('x', push);
  return bandlab::pushoutWord(alpha, push, beta);
}

void BM_FillControl(benchmark::State& state) {
  int push = static_cast<int>(state.range(0));
  bandlab::Word boundary = controlPushout(2, push);
  for (auto _ : state) {
    bandlab::FillResult r = bandlab::fill(boundary, 2, 24);
    benchmark::DoNotOptimize(r);
  }
}

void BM_FillRefusal(benchmark::State& state) {
  // A far loop alone on the boundary: every pre-check and search path must
  // conclude there is no disk.
  bandlab::Word alpha = bandlab::alphaLoop(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    bandlab::FillResult r =
        bandlab::fill(alpha, static_cast<int>(state.range(0)), 12);
    benchmark::DoNotOptimize(r);
  }
}

void BM_FillExhaustiveLength6(benchmark::State& state) {
  // The bridge workload: decide fillability for every word of length 6.
  std::vector<bandlab::Word> words;
  std::vector<std::string> frontier = {""};
  for (int len = 0; len < 6; ++len) {
    std::vector<std::string> next;
    for (const std::string& s : frontier) {
      for (char c : {'a', 'x', 'X'}) next.push_back(s + c);
    }
    frontier = std::move(next);
  }
  for (const std::string& s : frontier) {
    words.push_back(bandlab::Word::fromValid(s));
  }
  for (auto _ : state) {
    long found = 0;
    for (const bandlab::Word& w : words) {
      found += bandlab::fill(w, 2, 12).status == bandlab::FillStatus::Found;
    }
    benchmark::DoNotOptimize(found);
  }
}

}  // namespace

BENCHMARK(BM_FillControl)->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(BM_FillRefusal)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(BM_FillExhaustiveLength6);
BENCHMARK_MAIN();
