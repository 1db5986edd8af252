#include <benchmark/benchmark.h>

#include "introots/enumeration.hpp"

namespace {

void BM_EnumeratePairCubic(benchmark::State& state) {
  introots::PairConstraint c{3, 1, -6, 11};
  for (auto _ : state) benchmark::DoNotOptimize(introots::enumerate_pair(c));
}
BENCHMARK(BM_EnumeratePairCubic);

// middle position, radius ~12: the shape of the expensive real searches
void BM_EnumeratePairQuartic(benchmark::State& state) {
  introots::PairConstraint c{4, 2, 3, -2};
  for (auto _ : state) benchmark::DoNotOptimize(introots::enumerate_pair(c));
}
BENCHMARK(BM_EnumeratePairQuartic)->Unit(benchmark::kMillisecond);

void BM_EnumerateLastPair(benchmark::State& state) {
  introots::PairConstraint c{4, 3, -4, 36};
  for (auto _ : state) benchmark::DoNotOptimize(introots::enumerate_last_pair(c));
}
BENCHMARK(BM_EnumerateLastPair);

void BM_BruteForceAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(introots::brute_force_all(n, 4));
}
BENCHMARK(BM_BruteForceAll)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

} // namespace
