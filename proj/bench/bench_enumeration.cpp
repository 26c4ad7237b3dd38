#include <benchmark/benchmark.h>

#include "sharplat/enumeration.hpp"
#include "sharplat/gallery.hpp"

using namespace sharplat;

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const auto P = chain_poset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_structures_serial(P));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto P = chain_poset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_structures(P));
}

void BM_CensusSerial(benchmark::State& state) {
  const auto P = chain_poset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(census_serial(P));
}

void BM_CensusParallel(benchmark::State& state) {
  const auto P = chain_poset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(census(P));
}

void BM_CensusNonChainSerial(benchmark::State& state) {
  const auto posets = gallery::small_nonchain_posets();
  for (auto _ : state) {
    for (const auto& [name, P] : posets) benchmark::DoNotOptimize(census_serial(P));
  }
}

void BM_CensusNonChainParallel(benchmark::State& state) {
  const auto posets = gallery::small_nonchain_posets();
  for (auto _ : state) {
    for (const auto& [name, P] : posets) benchmark::DoNotOptimize(census(P));
  }
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusNonChainSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusNonChainParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
