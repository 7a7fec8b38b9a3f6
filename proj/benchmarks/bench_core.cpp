#include <benchmark/benchmark.h>
#include <hodgekit/mixed_model.hpp>

#include "../tests/generators.hpp"

using namespace hodgekit;

static void BM_rref(benchmark::State &state) {
    gen::Rng rng(1);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Mat m = gen::rand_real_mat(rng, n, n);
    for (auto _ : state) {
        Mat work = m;
        rref(work);
        benchmark::DoNotOptimize(work);
    }
}
BENCHMARK(BM_rref)->Arg(4)->Arg(8)->Arg(16);

static void BM_weight_filtration(benchmark::State &state) {
    gen::Rng rng(2);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Mat g = gen::rand_invertible(rng, n);
    Mat nil = g * gen::nilpotent_from_partition({n}) * (*inverse(g));
    for (auto _ : state) {
        Filtration w = weight_filtration(nil, 0);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_weight_filtration)->Arg(4)->Arg(6)->Arg(8);

static void BM_build_refinement(benchmark::State &state) {
    gen::Rng rng(3);
    MixedLocalModel mx = gen::rand_mixed_model(rng, 2);
    for (auto _ : state) {
        RefinedRestriction rr = build_refinement(mx, {1});
        benchmark::DoNotOptimize(rr);
    }
}
BENCHMARK(BM_build_refinement);

BENCHMARK_MAIN();
