// Parallel sweep kernels against their serial references.

#include <benchmark/benchmark.h>

#include "surgeryforge/families.hpp"
#include "surgeryforge/pentangle.hpp"

namespace {

void BM_pentangle_serial(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(sf::verify_fillingsimplifies_serial(state.range(0)));
}

void BM_pentangle_parallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(sf::verify_fillingsimplifies(state.range(0), static_cast<int>(state.range(1))));
}

void BM_census_serial(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(sf::gofklens_census_serial(state.range(0), state.range(1)));
}

void BM_census_parallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(sf::gofklens_census(state.range(0), state.range(1), static_cast<int>(state.range(2))));
}

} // namespace

BENCHMARK(BM_pentangle_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pentangle_parallel)->Args({3, 1})->Args({3, 2})->Args({4, 1})->Args({4, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census_serial)->Args({3, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census_parallel)->Args({3, 5, 1})->Args({3, 5, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
