#include <benchmark/benchmark.h>

#include "loccol/duality.hpp"
#include "loccol/generators.hpp"
#include "loccol/set_systems.hpp"
#include "loccol/solvers.hpp"
#include "loccol/swide.hpp"

using namespace loccol;

static void BM_ChromaticShift(benchmark::State& state) {
  const Graph h = shift_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(h).value);
}
BENCHMARK(BM_ChromaticShift)->DenseRange(4, 10, 2);

static void BM_LocalShift(benchmark::State& state) {
  const Graph h = shift_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(local_chromatic(h).value);
}
BENCHMARK(BM_LocalShift)->DenseRange(5, 8);

static void BM_PsiDMinComplete(benchmark::State& state) {
  const Graph k = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(psi_d_min(k).value);
}
BENCHMARK(BM_PsiDMinComplete)->DenseRange(3, 5);

static void BM_SwideOrientation(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(swide_orientation(static_cast<int>(state.range(0)), 4).report);
}
BENCHMARK(BM_SwideOrientation)->DenseRange(2, 5);

static void BM_DecideLocal2(benchmark::State& state) {
  const Digraph d = sym_directed_shift(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decide_local2(d).local2());
}
BENCHMARK(BM_DecideLocal2)->DenseRange(4, 12, 4);

static void BM_MaxShiftOrder(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(max_shift_order(2, 6).best_m);
}
BENCHMARK(BM_MaxShiftOrder);
BENCHMARK_MAIN();
