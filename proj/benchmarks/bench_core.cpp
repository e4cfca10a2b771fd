#include <benchmark/benchmark.h>

#include "kinklab/ansatz.hpp"
#include "kinklab/evolve.hpp"
#include "kinklab/interaction.hpp"
#include "kinklab/kink.hpp"
#include "kinklab/spectral.hpp"

using namespace kinklab;

static void BM_KinkEval(benchmark::State& state) {
    double x = -20.0;
    for (auto _ : state) {
        double s = 0.0;
        for (int i = 0; i < 1000; ++i) s += kink_eval(1, x + 0.04 * i);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_KinkEval);

static void BM_GCorrection(benchmark::State& state) {
    resolve_k1();
    for (auto _ : state) {
        double s = 0.0;
        for (int i = 0; i < 1000; ++i) s += g_correction(0, -20.0 + 0.04 * i);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_GCorrection);

static void BM_LeapfrogStep(benchmark::State& state) {
    Grid g = Grid::from_range(0.0, 260.0, 0.02);
    FieldPair init = ansatz_state({0.1, true, 0.0}, -20.0, g);
    init.phi.front() = 0.0;
    init.pi.front() = 0.0;
    init.phi.back() = 1.0;
    init.pi.back() = 0.0;
    EvolveConfig cfg;
    cfg.dt = 0.005;
    cfg.boundary = BoundaryMode::odd_half_line;
    for (auto _ : state) {
        FieldPair out = evolve(init, cfg, init.t + 64.0 * cfg.dt);
        benchmark::DoNotOptimize(out.phi.data());
    }
    state.SetItemsProcessed(state.iterations() * 64 * g.n);
}
BENCHMARK(BM_LeapfrogStep)->Unit(benchmark::kMillisecond);

static void BM_LowestSpectrum(benchmark::State& state) {
    OperatorSpec spec(ProfileKind::single_kink, Grid::from_range(-40.0, 40.0, 0.04));
    SymBanded A = assemble(spec);
    for (auto _ : state) {
        SpectrumResult sr = lowest_spectrum(A, spec.grid, 2);
        benchmark::DoNotOptimize(sr.eigenvalues.data());
    }
}
BENCHMARK(BM_LowestSpectrum)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
