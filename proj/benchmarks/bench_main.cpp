#include <benchmark/benchmark.h>

#include "contrast/enchained.hpp"
#include "contrast/graph.hpp"
#include "contrast/rmacg.hpp"
#include "contrast/solver.hpp"

using namespace contrast;

static void BM_Mes(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mes(k).cardinality());
}
BENCHMARK(BM_Mes)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_MesStrata(benchmark::State& state) {
  MesOptions opts;
  opts.strata = true;
  for (auto _ : state) benchmark::DoNotOptimize(mes(static_cast<int>(state.range(0)), opts).cardinality());
}
BENCHMARK(BM_MesStrata)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Chromatic(benchmark::State& state) {
  const Graph g = wheel_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_Chromatic)->Arg(8)->Arg(16)->Arg(32);

static void BM_SolveComplete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_macg(g).nodes);
}
BENCHMARK(BM_SolveComplete)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_SolveWheel(benchmark::State& state) {
  const Graph g = wheel_graph(static_cast<int>(state.range(0)));
  SearchConfig cfg;
  cfg.pruning = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_macg(g, cfg).nodes);
}
BENCHMARK(BM_SolveWheel)->Args({6, 1})->Args({6, 0})->Args({8, 1})->Unit(benchmark::kMillisecond);

static void BM_OracleWheel(benchmark::State& state) {
  const Graph g = wheel_graph(6);
  const auto values = mes(3).values;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_macg(g, values).nodes);
}
BENCHMARK(BM_OracleWheel)->Unit(benchmark::kMillisecond);

static void BM_OracleRmacgPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph p = path_graph(n);
  const IncompleteGreyscale inc(p, {{0, 0}, {n - 1, n % 2 == 0 ? 0 : 1}});
  for (auto _ : state) benchmark::DoNotOptimize(oracle_rmacg(p, inc).nodes);
}
BENCHMARK(BM_OracleRmacgPath)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
