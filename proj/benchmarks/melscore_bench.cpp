/**
 * @file melscore_bench.cpp
 * Microbenchmarks for the scoring, clustering, and search hot paths.
 */
#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <vector>

#include "melscore/distribution.h"
#include "melscore/experiments.h"
#include "melscore/measure.h"
#include "melscore/piece.h"
#include "melscore/search.h"

namespace {

const melscore::Piece& samplePiece() {
  static const melscore::Piece piece{"P1", {120, 160, 170, 145}};
  return piece;
}

std::vector<double> randomValues(std::size_t size) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> draw(-8, 8);
  std::vector<double> values(size);
  for (double& value : values) {
    value = 5.0 * draw(rng);
  }
  return values;
}

void BM_Decompose(benchmark::State& state) {
  const melscore::Piece& piece = samplePiece();
  for (auto _ : state) {
    benchmark::DoNotOptimize(melscore::decompose(piece));
  }
}
BENCHMARK(BM_Decompose);

void BM_MValue(benchmark::State& state) {
  const melscore::Piece& piece = samplePiece();
  for (auto _ : state) {
    benchmark::DoNotOptimize(melscore::mValue(piece));
  }
}
BENCHMARK(BM_MValue);

void BM_Cluster1d(benchmark::State& state) {
  const std::vector<double> values =
      randomValues(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(melscore::cluster1d(values, 3));
  }
}
BENCHMARK(BM_Cluster1d)->Arg(6)->Arg(32)->Arg(256);

void BM_DistributionCheck(benchmark::State& state) {
  const melscore::Decomposition decomposition =
      melscore::decompose(samplePiece());
  for (auto _ : state) {
    benchmark::DoNotOptimize(melscore::distributionCheck(decomposition));
  }
}
BENCHMARK(BM_DistributionCheck);

void BM_PermutationExperiment(benchmark::State& state) {
  const melscore::Piece& piece = samplePiece();
  for (auto _ : state) {
    benchmark::DoNotOptimize(melscore::permutationExperiment(piece));
  }
}
BENCHMARK(BM_PermutationExperiment);

void BM_EnergySweep(benchmark::State& state) {
  melscore::SearchConfig config;
  config.targetLevel = melscore::EnergyLevel{
      static_cast<double>(state.range(0))};
  const unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(melscore::energySweep(config, threads));
  }
}
BENCHMARK(BM_EnergySweep)
    ->Args({25, 1})
    ->Args({75, 1})
    ->Args({75, 4});

void BM_SpacingLab(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  const auto sum = static_cast<double>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(melscore::spacingLab(count, sum, 5));
  }
}
BENCHMARK(BM_SpacingLab)->Args({3, 25})->Args({5, 60});

}  // namespace

BENCHMARK_MAIN();
