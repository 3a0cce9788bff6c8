#include <benchmark/benchmark.h>

#include "curskel/cssp.hpp"
#include "curskel/rng.hpp"
#include "curskel/verify.hpp"

using namespace curskel;

static void BM_GreedyPivot(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SeededRng rng(6);
    const Matrix a = gaussian_matrix(rng, n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(select_columns(a, n / 4, SelectionStrategy::greedy()));
    }
}
BENCHMARK(BM_GreedyPivot)->Arg(16)->Arg(32);

static void BM_ExhaustiveCssp(benchmark::State& state) {
    SeededRng rng(7);
    const Matrix a = gaussian_matrix(rng, 12, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exhaustive_cssp(a, 3, NormKind::frobenius()));
    }
}
BENCHMARK(BM_ExhaustiveCssp);

static void BM_LeverageSample(benchmark::State& state) {
    SeededRng rng(8);
    const Matrix a = gaussian_matrix(rng, 32, 32);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(select_columns(a, 8, SelectionStrategy::leverage(seed++)));
    }
}
BENCHMARK(BM_LeverageSample);
