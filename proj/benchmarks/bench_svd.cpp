#include <benchmark/benchmark.h>

#include "curskel/matrix.hpp"
#include "curskel/rng.hpp"
#include "curskel/svd.hpp"
#include "curskel/verify.hpp"

using namespace curskel;

static void BM_Svd(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SeededRng rng(1);
    const Matrix a = gaussian_matrix(rng, n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(svd(a));
    }
}
BENCHMARK(BM_Svd)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_SvdRankDeficient(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SeededRng rng(2);
    const Matrix a = planted_rank_matrix(rng, n, n, n / 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(svd(a));
    }
}
BENCHMARK(BM_SvdRankDeficient)->Arg(16)->Arg(64);

static void BM_Pinv(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SeededRng rng(3);
    const Matrix a = gaussian_matrix(rng, n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pinv(a));
    }
}
BENCHMARK(BM_Pinv)->Arg(16)->Arg(32);
