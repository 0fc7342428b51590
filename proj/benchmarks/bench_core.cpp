#include "lefschetz/driver.hpp"
#include "lefschetz/filtration.hpp"
#include "lefschetz/heisenberg.hpp"
#include "lefschetz/smooth_model.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace lefschetz;

namespace {

Matrix random_matrix(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-5, 5);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

void BM_rref(benchmark::State& state) {
    Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_rref)->Arg(16)->Arg(32)->Arg(64);

void BM_build_smooth_model(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_smooth_model(g, 2 * g + 2).module.V->total_dim());
}
BENCHMARK(BM_build_smooth_model)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_verify_heisenberg(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    SmoothModel sm = build_smooth_model(g, 2 * g + 2);
    for (auto _ : state) benchmark::DoNotOptimize(verify_heisenberg(sm.module).size());
}
BENCHMARK(BM_verify_heisenberg)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_weight_filtration(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    JacobianModel jac(g);
    const Matrix l = jac.e().transpose();
    for (auto _ : state) benchmark::DoNotOptimize(weight_filtration(l, g).degree);
}
BENCHMARK(BM_weight_filtration)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_run_checks(benchmark::State& state) {
    SmoothModel sm = build_smooth_model(2, 6);
    RunOptions opts;
    opts.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_checks(sm.module, opts).size());
}
BENCHMARK(BM_run_checks)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
