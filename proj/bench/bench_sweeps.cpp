// Serial against OpenMP for the heavier sweeps. Arg 0 is serial, 1 parallel.

#include "clausius/bath.hpp"
#include "clausius/config.hpp"
#include "clausius/figures.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace clausius;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_fig3b(benchmark::State& state) {
    app::RunConfig cfg = app::resolve_config({});
    cfg.grid_n = 30;
    for (auto _ : state) {
        benchmark::DoNotOptimize(app::run_figure("fig3b", cfg, mode(state)));
    }
    label(state);
}

void BM_fig4(benchmark::State& state) {
    const app::RunConfig cfg = app::resolve_config({});
    for (auto _ : state) {
        benchmark::DoNotOptimize(app::run_figure("fig4", cfg, mode(state)));
    }
    label(state);
}

void BM_coefficients(benchmark::State& state) {
    const bath::BathSpec spec = app::resolve_config({}).bath();
    const std::vector<double> grid = app::make_grid(1e-3 / spec.cutoff(), 1e2 / spec.cutoff(), 64, app::Spacing::log);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bath::time_dependent_coefficients(spec, grid, mode(state)));
    }
    label(state);
}

} // namespace

BENCHMARK(BM_fig3b)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fig4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_coefficients)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
