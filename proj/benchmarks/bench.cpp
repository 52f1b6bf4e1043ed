#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "emcomb/characters.hpp"
#include "emcomb/composition.hpp"
#include "emcomb/emc.hpp"
#include "emcomb/qseries.hpp"
#include "emcomb/statistics.hpp"

using namespace emcomb;

namespace {
std::vector<Composition> random_tuple(int s, int n, int d, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> bin(0, n - 1);
    std::vector<Composition> tuple;
    tuple.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        std::vector<int> a(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < s; ++j) ++a[static_cast<std::size_t>(bin(rng))];
        tuple.emplace_back(std::move(a));
    }
    return tuple;
}
} // namespace

static void BM_emc_words(benchmark::State& state) {
    const auto tuple = random_tuple(static_cast<int>(state.range(0)),
                                    static_cast<int>(state.range(1)),
                                    static_cast<int>(state.range(2)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(emc_rsk(tuple));
}
BENCHMARK(BM_emc_words)->Args({50, 10, 4})->Args({500, 20, 3})->Args({2000, 40, 2});

static void BM_emc_diagrams(benchmark::State& state) {
    const auto tuple = random_tuple(static_cast<int>(state.range(0)),
                                    static_cast<int>(state.range(1)),
                                    static_cast<int>(state.range(2)), 11);
    std::vector<YoungDiagram> diagrams;
    for (const Composition& c : tuple) diagrams.push_back(diagram_of(c));
    for (auto _ : state) benchmark::DoNotOptimize(unimodal_symdiff(diagrams));
}
BENCHMARK(BM_emc_diagrams)->Args({50, 10, 4})->Args({500, 20, 3})->Args({2000, 40, 2});

static void BM_qbin_bracket(benchmark::State& state) {
    const int a = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qbin_bracket(a, a / 2));
}
BENCHMARK(BM_qbin_bracket)->Arg(16)->Arg(24)->Arg(32);

static void BM_character(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(char_V(state.range(0), static_cast<int>(state.range(1)), 3));
}
BENCHMARK(BM_character)->Args({4, 6})->Args({6, 6});

static void BM_genfun(benchmark::State& state) {
    const int tmax = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(genfun_H(4, 4, tmax));
}
BENCHMARK(BM_genfun)->Arg(6)->Arg(10);

static void BM_pair_table(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            emc_vs_d_table(state.range(0), static_cast<int>(state.range(1)), 2));
}
BENCHMARK(BM_pair_table)->Args({3, 3})->Args({5, 5});

BENCHMARK_MAIN();
