// Serial reference vs OpenMP kernels for the two exhaustive oracles.

#include <benchmark/benchmark.h>

#include "posetcodes/analytic.hpp"
#include "posetcodes/code_builder.hpp"
#include "posetcodes/oracle.hpp"

using namespace posetcodes;

namespace {

// m = n/2, ideal [2] u ([m+3]\[m]).
std::pair<TwoChainPoset, IdealSpec> instance(unsigned n) {
  const unsigned m = n / 2;
  return {TwoChainPoset(m, n), IdealSpec::both(2, m + 3)};
}

void BM_DirectSerial(benchmark::State& state) {
  const auto [p, ideal] = instance(static_cast<unsigned>(state.range(0)));
  const auto d = build_defining_set(p, ideal);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::direct_distribution_serial(d));
}

void BM_DirectParallel(benchmark::State& state) {
  const auto [p, ideal] = instance(static_cast<unsigned>(state.range(0)));
  const auto d = build_defining_set(p, ideal);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::direct_distribution(d));
}

void BM_CharsumSerial(benchmark::State& state) {
  const auto [p, ideal] = instance(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::charsum_distribution_serial(p, ideal));
}

void BM_CharsumParallel(benchmark::State& state) {
  const auto [p, ideal] = instance(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::charsum_distribution(p, ideal));
}

void BM_Analytic(benchmark::State& state) {
  const auto [p, ideal] = instance(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analytic_distribution(p, ideal));
}

}  // namespace

BENCHMARK(BM_DirectSerial)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectParallel)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharsumSerial)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharsumParallel)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Analytic)->Arg(12)->Arg(40)->Arg(62);

BENCHMARK_MAIN();
