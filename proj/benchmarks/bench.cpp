#include <benchmark/benchmark.h>

#include "coverhfk/cfk_base.hpp"
#include "coverhfk/cover.hpp"
#include "coverhfk/torsion.hpp"

using namespace coverhfk;

static void BM_alexander_walk(benchmark::State& state) {
    TwoBridgeKnot k = normalize(state.range(0), state.range(0) - 2);
    for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial(k));
}
BENCHMARK(BM_alexander_walk)->Arg(99)->Arg(499);

static void BM_alexander_fox(benchmark::State& state) {
    TwoBridgeKnot k = normalize(state.range(0), state.range(0) - 2);
    for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial_fox(k));
}
BENCHMARK(BM_alexander_fox)->Arg(99)->Arg(499);

static void BM_cover_expand(benchmark::State& state) {
    TwoBridgeKnot k = normalize(state.range(0), state.range(0) - 2);
    for (auto _ : state) benchmark::DoNotOptimize(compute_cover(k, 2));
}
BENCHMARK(BM_cover_expand)->Arg(15)->Arg(49)->Arg(99);

static void BM_turaev_torsion(benchmark::State& state) {
    TwoBridgeKnot k = normalize(state.range(0), state.range(0) - 2);
    for (auto _ : state) benchmark::DoNotOptimize(turaev_torsion(k, 2));
}
BENCHMARK(BM_turaev_torsion)->Arg(15)->Arg(49);

static void BM_central_iso(benchmark::State& state) {
    TwoBridgeKnot k = normalize(state.range(0), state.range(0) - 2);
    for (auto _ : state) benchmark::DoNotOptimize(central_iso_check(k));
}
BENCHMARK(BM_central_iso)->Arg(49)->Arg(99);

BENCHMARK_MAIN();
