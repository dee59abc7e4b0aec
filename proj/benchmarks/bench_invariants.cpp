#include "bench_common.hpp"

#include <benchmark/benchmark.h>

using namespace gridband;

static void BM_Bracket(benchmark::State& state) {
  const auto pd = to_planar(bench_grid("7_3", static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(kauffman_bracket(pd));
  state.counters["crossings"] = pd.crossing_count();
}
BENCHMARK(BM_Bracket)->Arg(8)->Arg(14)->Arg(20)->Arg(24)->Unit(benchmark::kMicrosecond);

static void BM_Alexander(benchmark::State& state) {
  const auto pd = to_planar(bench_grid("7_3", static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(alexander(pd));
  state.counters["crossings"] = pd.crossing_count();
}
BENCHMARK(BM_Alexander)->Arg(8)->Arg(20)->Unit(benchmark::kMicrosecond);

static void BM_Kauffman(benchmark::State& state) {
  const auto& seed = bench_table().at(state.range(0) ? "8_8" : "5_1").seed;
  const auto pd = to_planar(seed);
  for (auto _ : state)
    benchmark::DoNotOptimize(kauffman_polynomial(pd));
  state.counters["crossings"] = pd.crossing_count();
}
BENCHMARK(BM_Kauffman)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Key(benchmark::State& state) {
  const auto g = bench_table().at("8_19").seed;
  for (auto _ : state)
    benchmark::DoNotOptimize(key(g));
}
BENCHMARK(BM_Key)->Unit(benchmark::kMicrosecond);
