#include <benchmark/benchmark.h>

#include "bandlab/cayley.hpp"
#include "bandlab/lamp.hpp"
#include "bandlab/semistability.hpp"

namespace {

void BM_BuildBall(benchmark::State& state) {
  int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bandlab::buildBall(radius, 2));
  }
}

void BM_Distance(benchmark::State& state) {
  // On-the-fly distance to a far corner of the given radius.
  int radius = static_cast<int>(state.range(0));
  bandlab::LampElement corner;
  corner.lamps = {0};
  corner.shift = radius - 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bandlab::distance(
        corner, bandlab::LampElement::identity(), radius));
  }
}

void BM_ComputeK(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bandlab::computeK(n, 8));
  }
}

void BM_DeskExperiment(benchmark::State& state) {
  bandlab::ExperimentConfig cfg;
  cfg.level = 2;
  cfg.baseOffset = 15;
  cfg.push = 6;
  cfg.betaLenMax = static_cast<int>(state.range(0));
  cfg.ballRadius = 12;
  cfg.areaBound = 20;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bandlab::runExperiment(cfg, 1));
  }
}

}  // namespace

BENCHMARK(BM_BuildBall)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(BM_Distance)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_ComputeK)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(BM_DeskExperiment)->Arg(6)->Arg(8);
BENCHMARK_MAIN();
