#include <benchmark/benchmark.h>

#include "curskel/cur.hpp"
#include "curskel/rng.hpp"
#include "curskel/verify.hpp"

using namespace curskel;

static void BM_Characterize(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SeededRng rng(4);
    const Matrix a = planted_rank_matrix(rng, n, n, 5);
    const IndexSet rows = sample_rank_capturing(rng, n, 5, 0.2);
    const IndexSet cols = sample_rank_capturing(rng, n, 5, 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(characterize(a, rows, cols, 1e-8));
    }
}
BENCHMARK(BM_Characterize)->Arg(15)->Arg(50);

static void BM_CurProjection(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SeededRng rng(5);
    const Matrix a = planted_rank_matrix(rng, n, n, 5);
    const IndexSet rows = sample_rank_capturing(rng, n, 5, 0.0);
    const IndexSet cols = sample_rank_capturing(rng, n, 5, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cur_projection(a, rows, cols));
    }
}
BENCHMARK(BM_CurProjection)->Arg(15)->Arg(50);

static void BM_EquivalenceSweep(benchmark::State& state) {
    SweepConfig cfg;
    cfg.trials = static_cast<std::uint64_t>(state.range(0));
    cfg.seed = 42;
    for (auto _ : state) {
        benchmark::DoNotOptimize(equivalence_sweep(cfg));
    }
}
BENCHMARK(BM_EquivalenceSweep)->Arg(100);
