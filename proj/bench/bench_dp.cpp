#include "cograph/dp_kernel.hpp"
#include "cograph/reference_dp.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cograph;

namespace {

Cotree tree_of(int leaves) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(leaves));
    return random_cotree(leaves, rng, {true, 4});
}

void BM_Serial(benchmark::State& state) {
    const Cotree t = tree_of(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_serial(t, 5, 10));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Parallel(benchmark::State& state) {
    const Cotree t = tree_of(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_parallel(t, 5, 10));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Reference(benchmark::State& state) {
    const Cotree t = tree_of(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference_feasible_set(t, {3, 3, 3}));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Serial)->RangeMultiplier(4)->Range(1 << 10, 1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->RangeMultiplier(4)->Range(1 << 10, 1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reference)->RangeMultiplier(4)->Range(1 << 6, 1 << 10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
