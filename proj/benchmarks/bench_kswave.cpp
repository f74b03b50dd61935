#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "kswave/elliptic.hpp"
#include "kswave/pde.hpp"
#include "kswave/wave.hpp"

using namespace kswave;

namespace {

std::vector<double> smooth_front(const Grid1D& g) {
    std::vector<double> u(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) u[i] = 0.5 * (1.0 + std::tanh(g[i]));
    return u;
}

void BM_GreenConvolve(benchmark::State& state) {
    const auto g = Grid1D::symmetric_nodes(60.0, 120.0 / static_cast<double>(state.range(0)));
    const auto u = smooth_front(g);
    for (auto _ : state) benchmark::DoNotOptimize(green_convolve(u, g, 1.0, Tails{}));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreenConvolve)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oN);

void BM_DiscreteSolve(benchmark::State& state) {
    const Grid1D g(-20.0, 20.0, static_cast<std::size_t>(state.range(0)));
    const auto u = smooth_front(g);
    for (auto _ : state) benchmark::DoNotOptimize(discrete_solve(u, 1.0, g.dx()));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DiscreteSolve)->RangeMultiplier(4)->Range(256, 65536)->Complexity(benchmark::oN);

void BM_PdeStep(benchmark::State& state) {
    const Grid1D g(-20.0, 20.0, static_cast<std::size_t>(state.range(0)));
    const auto params = NormalizedParams::from_dimensionless(1.0, 1.0);
    const SimState s(0.0, g, smooth_front(g));
    const double dt = stable_dt(s.u, g, params, SchemeConfig{});
    for (auto _ : state) benchmark::DoNotOptimize(step(s, params, SchemeConfig{}, dt));
}
BENCHMARK(BM_PdeStep)->Arg(800)->Arg(3200);

void BM_WaveOperator(benchmark::State& state) {
    const WaveParams wp{2.0 * std::sqrt(2.0), 0.2, 0.5};
    const auto g = Grid1D::symmetric_nodes(60.0, 0.05);
    const auto u = logistic_initial_profile(g, wp, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(apply_wave_operator(u, wp, 1.0, 1.0));
}
BENCHMARK(BM_WaveOperator);

void BM_SolveProfile(benchmark::State& state) {
    const WaveParams wp{2.0 * std::sqrt(2.0), 0.2, 0.5};
    const auto g = Grid1D::symmetric_nodes(60.0, 0.05);
    const auto init = logistic_initial_profile(g, wp, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(solve_profile(wp, 1.0, 1.0, init));
}
BENCHMARK(BM_SolveProfile)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
