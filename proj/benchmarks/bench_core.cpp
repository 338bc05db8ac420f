#include "zeta/asymptotics.hpp"
#include "zeta/homology.hpp"
#include "zeta/power_series.hpp"
#include "zeta/subshift.hpp"
#include "zeta/torus.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace zeta;

namespace {

IntMatrix random_matrix(std::mt19937& gen, int dim, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::vector<std::vector<Int>> rows(static_cast<size_t>(dim),
                                       std::vector<Int>(static_cast<size_t>(dim)));
    for (auto& row : rows)
        for (auto& entry : row)
            entry = Int(dist(gen));
    return IntMatrix(rows);
}

void BM_ReversedCharPoly(benchmark::State& state) {
    std::mt19937 gen(17);
    const IntMatrix a = random_matrix(gen, static_cast<int>(state.range(0)), -5, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(reversed_char_poly(a));
}

void BM_ZetaSeriesFromCounts(benchmark::State& state) {
    const TorusMap cat(IntMatrix({{Int(2), Int(1)}, {Int(1), Int(1)}}));
    std::vector<Int> counts;
    for (long n = 1; n <= state.range(0); ++n)
        counts.push_back(nielsen_number(cat, n));
    for (auto _ : state)
        benchmark::DoNotOptimize(zeta_series_from_counts(counts));
}

void BM_NielsenSequence(benchmark::State& state) {
    const TorusMap cat(IntMatrix({{Int(2), Int(1)}, {Int(1), Int(1)}}));
    const int horizon = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(asymptotic_invariant(cat, horizon));
}

void BM_TraceCount(benchmark::State& state) {
    const Subshift golden(IntMatrix({{Int(1), Int(1)}, {Int(1), Int(0)}}));
    for (auto _ : state)
        benchmark::DoNotOptimize(trace_count(golden, state.range(0)));
}

void BM_BruteForceCount(benchmark::State& state) {
    const Subshift golden(IntMatrix({{Int(1), Int(1)}, {Int(1), Int(0)}}));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_count(golden, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_ReversedCharPoly)->DenseRange(2, 8, 2);
BENCHMARK(BM_ZetaSeriesFromCounts)->Arg(32)->Arg(128)->Arg(512);
BENCHMARK(BM_NielsenSequence)->Arg(60)->Arg(240)->Arg(960);
BENCHMARK(BM_TraceCount)->Arg(8)->Arg(12);
BENCHMARK(BM_BruteForceCount)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
