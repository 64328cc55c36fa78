// Parallel blocked Koszul kernel against the serial dense reference.

#include "bettikit/koszul.hpp"
#include "bettikit/monomial_ideal.hpp"

#include <benchmark/benchmark.h>

using namespace bettikit;

namespace {

MonomialIdeal workload(int which)
{
    switch (which) {
    case 0: return random_ideal(3, 5, 6, 7);
    case 1: return random_ideal(4, 4, 6, 11);
    case 2: return MonomialIdeal(4, {{3, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}, {1, 1, 1, 1}});
    case 3: return random_ideal(5, 3, 6, 5);
    default: return random_ideal(5, 4, 8, 3);
    }
}

void BM_Parallel(benchmark::State& state)
{
    const MonomialIdeal ideal = workload(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_table(ideal));
}

void BM_Reference(benchmark::State& state)
{
    const MonomialIdeal ideal = workload(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_table_reference(ideal));
}

void BM_ParallelRationals(benchmark::State& state)
{
    const MonomialIdeal ideal = workload(static_cast<int>(state.range(0)));
    KoszulOptions opt;
    opt.field = FieldChoice::rationals();
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_table(ideal, opt));
}

}  // namespace

BENCHMARK(BM_Parallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reference)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelRationals)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
