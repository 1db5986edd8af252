#include <benchmark/benchmark.h>

#include <random>

#include "introots/inequalities.hpp"
#include "introots/polynomial.hpp"

namespace {

using introots::Int;

std::vector<Int> random_roots(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-50, 50);
  std::vector<Int> out(static_cast<std::size_t>(n));
  for (auto& r : out) {
    int v = 0;
    while (v == 0) v = dist(rng);
    r = v;
  }
  return out;
}

void BM_FromRoots(benchmark::State& state) {
  introots::RootMultiset roots(random_roots(static_cast<int>(state.range(0)), 42));
  for (auto _ : state) benchmark::DoNotOptimize(from_roots(roots));
}
BENCHMARK(BM_FromRoots)->Arg(8)->Arg(32)->Arg(128);

void BM_Multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  introots::Polynomial p = from_roots(introots::RootMultiset(random_roots(n, 1)));
  introots::Polynomial q = from_roots(introots::RootMultiset(random_roots(n, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(p, q));
}
BENCHMARK(BM_Multiply)->Arg(8)->Arg(32)->Arg(128);

void BM_CheckAll(benchmark::State& state) {
  introots::Polynomial p = from_roots(introots::RootMultiset(random_roots(16, 3)));
  for (auto _ : state) benchmark::DoNotOptimize(introots::check_all(p));
}
BENCHMARK(BM_CheckAll);

} // namespace
