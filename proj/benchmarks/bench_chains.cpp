#include <benchmark/benchmark.h>

#include "introots/chains.hpp"

namespace {

void BM_ChainCountExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(introots::chain_count_exact(n));
}
BENCHMARK(BM_ChainCountExact)->Arg(64)->Arg(1024)->Arg(8192);

void BM_ChainBruteForce(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(introots::chain_brute_force(20));
}
BENCHMARK(BM_ChainBruteForce)->Unit(benchmark::kMillisecond);

} // namespace
