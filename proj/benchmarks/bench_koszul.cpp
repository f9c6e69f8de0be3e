#include "halg/permutation.hpp"

#include <benchmark/benchmark.h>

using namespace halg;

static void BM_Unshuffles(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    int q = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto sh = unshuffles({p, q});
        benchmark::DoNotOptimize(sh);
    }
}
BENCHMARK(BM_Unshuffles)->Args({2, 2})->Args({3, 3})->Args({4, 2});

static void BM_KoszulSign(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<int> degs;
    for (int i = 0; i < n; ++i)
        degs.push_back(i % 2);
    std::vector<Perm> sh = unshuffles({n / 2, n - n / 2});
    for (auto _ : state) {
        int acc = 0;
        for (const Perm& s : sh)
            acc += koszul_sign(s, degs);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_KoszulSign)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
