#include <benchmark/benchmark.h>

#include "framelab/analytic.hpp"
#include "framelab/frame.hpp"
#include "framelab/rng.hpp"
#include "framelab/special.hpp"
#include "framelab/spin.hpp"
#include "framelab/wft.hpp"

using namespace framelab;

static void BM_BesselKComplex(benchmark::State& state) {
    const cplx w(0.5 + 0.1 * static_cast<double>(state.range(0)), 0.7);
    for (auto _ : state) benchmark::DoNotOptimize(bessel_k(1.25, w));
}
BENCHMARK(BM_BesselKComplex)->Arg(1)->Arg(30);

static void BM_NeumannInverse(benchmark::State& state) {
    Rng rng(3);
    const int d = static_cast<int>(state.range(0));
    const FrameSystem fr = random_frame(rng, d, 3 * d);
    for (auto _ : state) benchmark::DoNotOptimize(neumann_inverse(fr).terms_used);
}
BENCHMARK(BM_NeumannInverse)->Arg(8)->Arg(32);

static void BM_WftLatticeAnalyze(benchmark::State& state) {
    const double dt = 0.01, tau = 0.64;
    const WindowSpec h = WindowSpec::smooth_bump(tau, dt);
    const SampledSignal s = SampledSignal::from_function(
        [](double t) { return cplx(std::cos(6 * t) * std::exp(-t * t / 8)); }, -8.0, dt, 1601);
    const WFTLattice lat = full_lattice(s, h, tau / 2);
    for (auto _ : state) benchmark::DoNotOptimize(wft_lattice_analyze(s, h, lat).values.data());
}
BENCHMARK(BM_WftLatticeAnalyze)->Unit(benchmark::kMillisecond);

static void BM_AstLine(benchmark::State& state) {
    const FieldSample g = FieldSample::from_function(
        [](const rvec& x) { return cplx(std::exp(-(x[0] * x[0] + x[1] * x[1]) / 2)); }, {281, 281},
        {-7.0, -7.0}, {0.05, 0.05});
    for (auto _ : state) benchmark::DoNotOptimize(ast_eval(g, {0.2, -0.1}, {0.5, 0.3}, AstMethod::line));
}
BENCHMARK(BM_AstLine)->Unit(benchmark::kMillisecond);

static void BM_SpinSphereResolution(benchmark::State& state) {
    const SpinRep rep = build_rep(0.5 * static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sphere_resolution_check(rep, 16).defect);
}
BENCHMARK(BM_SpinSphereResolution)->Arg(1)->Arg(5);

BENCHMARK_MAIN();
