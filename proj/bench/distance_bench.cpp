// Serial reference vs the OpenMP Gray-walk kernel on exhaustive
// minimum-weight search, the workload that dominates every experiment.

#include <benchmark/benchmark.h>

#include "gapmd/code.hpp"
#include "gapmd/csp.hpp"
#include "gapmd/kernels.hpp"

using namespace gapmd;

namespace {

Mat random_generator(const Field& F, int k, int n, uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        Mat G(k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) G.at(i, j) = Elt(rng.below(F.q()));
        if (int(independent_rows(F, G).size()) == k) return G;
    }
}

void BM_min_weight_serial_f2(benchmark::State& state) {
    const Field& F = Field::of(2);
    Mat G = random_generator(F, int(state.range(0)), 48, 12345);
    for (auto _ : state) {
        auto r = min_weight_span_serial(F, G, uint64_t(1) << 40);
        benchmark::DoNotOptimize(r.weight);
    }
}

void BM_min_weight_parallel_f2(benchmark::State& state) {
    const Field& F = Field::of(2);
    Mat G = random_generator(F, int(state.range(0)), 48, 12345);
    for (auto _ : state) {
        auto r = min_weight_span(F, G, uint64_t(1) << 40, 0);
        benchmark::DoNotOptimize(r.weight);
    }
}

void BM_min_weight_serial_f3(benchmark::State& state) {
    const Field& F = Field::of(3);
    Mat G = random_generator(F, int(state.range(0)), 40, 777);
    for (auto _ : state) {
        auto r = min_weight_span_serial(F, G, uint64_t(1) << 40);
        benchmark::DoNotOptimize(r.weight);
    }
}

void BM_min_weight_parallel_f3(benchmark::State& state) {
    const Field& F = Field::of(3);
    Mat G = random_generator(F, int(state.range(0)), 40, 777);
    for (auto _ : state) {
        auto r = min_weight_span(F, G, uint64_t(1) << 40, 0);
        benchmark::DoNotOptimize(r.weight);
    }
}

void BM_opt_serial(benchmark::State& state) {
    auto psi = gen_planted(int(state.range(0)), 2 * int(state.range(0)), 99).first;
    for (auto _ : state) {
        auto r = opt_exact_serial(psi);
        benchmark::DoNotOptimize(r.best_count);
    }
}

void BM_opt_parallel(benchmark::State& state) {
    auto psi = gen_planted(int(state.range(0)), 2 * int(state.range(0)), 99).first;
    for (auto _ : state) {
        auto r = opt_exact(psi, 0);
        benchmark::DoNotOptimize(r.best_count);
    }
}

}  // namespace

BENCHMARK(BM_min_weight_serial_f2)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_min_weight_parallel_f2)->Arg(14)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_min_weight_serial_f3)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_min_weight_parallel_f3)->Arg(9)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_opt_serial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_opt_parallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
