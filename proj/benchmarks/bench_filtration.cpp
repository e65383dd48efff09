#include <benchmark/benchmark.h>

#include "lcmfilt/filtration.hpp"
#include "lcmfilt/graphs.hpp"
#include "lcmfilt/lattice.hpp"
#include "lcmfilt/reliability.hpp"

using namespace lcmfilt;

static void BM_LatticeClosure(benchmark::State& state) {
    auto ideal = failure_ideal(
        {SystemKind::ConsecutiveCircular, static_cast<int>(state.range(0)), 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(build_lcm_lattice(ideal, 64));
}
BENCHMARK(BM_LatticeClosure)->Arg(10)->Arg(14)->Arg(18);

static void BM_UsualFiltration(benchmark::State& state) {
    auto ideal = failure_ideal(
        {SystemKind::ConsecutiveLinear, static_cast<int>(state.range(0)), 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(lcm_filtration(ideal, 64));
}
BENCHMARK(BM_UsualFiltration)->Arg(10)->Arg(14)->Arg(18);

static void BM_StepwiseFiltration(benchmark::State& state) {
    auto ideal = failure_ideal(
        {SystemKind::ConsecutiveLinear, static_cast<int>(state.range(0)), 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(stepwise_filtration(ideal));
}
BENCHMARK(BM_StepwiseFiltration)->Arg(10)->Arg(14)->Arg(18);

static void BM_CutIdeal(benchmark::State& state) {
    Graph g = Graph::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cut_ideal(g));
}
BENCHMARK(BM_CutIdeal)->Arg(5)->Arg(6)->Arg(7);

BENCHMARK_MAIN();
