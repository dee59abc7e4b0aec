#include "bench_common.hpp"

#include <benchmark/benchmark.h>

using namespace gridband;

static void BM_Scramble(benchmark::State& state) {
  ScramblePolicy p;
  p.moves = static_cast<int>(state.range(0));
  const auto& seed = bench_table().at("5_1").seed;
  for (auto _ : state) {
    ++p.rng_seed;
    benchmark::DoNotOptimize(scramble(seed, p));
  }
}
BENCHMARK(BM_Scramble)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

static void BM_Simplify(benchmark::State& state) {
  ScramblePolicy p;
  p.rng_seed = 3;
  const auto g = scramble(bench_table().at("5_1").seed, p);
  std::uint64_t s = 0;
  for (auto _ : state) {
    Rng rng(++s);
    benchmark::DoNotOptimize(simplify(g, SimplifyPolicy{}, rng));
  }
  state.counters["n"] = g.n();
}
BENCHMARK(BM_Simplify)->Unit(benchmark::kMillisecond);

static void BM_EnumerateBands(benchmark::State& state) {
  ScramblePolicy p;
  p.rng_seed = 4;
  const auto g = scramble(bench_table().at("7_3").seed, p);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_bands(g, BandKind::NonCoherent));
  state.counters["n"] = g.n();
}
BENCHMARK(BM_EnumerateBands)->Unit(benchmark::kMicrosecond);

// one scrambled grid through every non-coherent band and identification
static void BM_ExploreGrid(benchmark::State& state) {
  ScramblePolicy p;
  p.rng_seed = 5;
  const auto g = scramble(bench_table().at("3_1").seed, p);
  const auto effort = default_effort();
  for (auto _ : state) {
    int identified = 0;
    for (const auto& m : enumerate_bands(g, BandKind::NonCoherent)) {
      Rng rng(band_seed(0, 0, m));
      identified += identify(apply_band(g, m), bench_table(), effort, rng) ? 1 : 0;
    }
    benchmark::DoNotOptimize(identified);
  }
}
BENCHMARK(BM_ExploreGrid)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
