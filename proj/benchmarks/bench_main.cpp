#include <benchmark/benchmark.h>

#include <random>

#include "ratiolab/conjectures.hpp"
#include "ratiolab/euler.hpp"
#include "ratiolab/lfunctions.hpp"
#include "ratiolab/rmt.hpp"
#include "ratiolab/zeta.hpp"

using namespace ratiolab;

static void BM_ZetaCriticalLine(benchmark::State& state) {
    double t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zeta(Complex(0.5, t)));
}
BENCHMARK(BM_ZetaCriticalLine)->Arg(100)->Arg(1000)->Arg(5000);

static void BM_ZetaBatchSweep(benchmark::State& state) {
    double t_max = static_cast<double>(state.range(0));
    CriticalLineZeta batch(t_max, {0.1, 0.15}, {0.12, 0.2});
    CriticalLineZeta::Values v;
    double t = 1.0;
    for (auto _ : state) {
        batch.eval(t, v);
        benchmark::DoNotOptimize(v.up[0]);
        t += 0.37;
        if (t > t_max) t = 1.0;
    }
}
BENCHMARK(BM_ZetaBatchSweep)->Arg(1000)->Arg(5000);

static void BM_TheoremRhsUnitary(benchmark::State& state) {
    ShiftSet s;
    s.alpha = {Complex(0.1), Complex(0.2)};
    s.beta = {Complex(0.15), Complex(0.25)};
    s.gamma = {Complex(0.3)};
    s.delta = {Complex(0.35)};
    rmt::RatioSpec spec(s);
    rmt::GroupSpec g{rmt::GroupKind::Unitary, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(rmt::theorem_rhs(g, spec));
}
BENCHMARK(BM_TheoremRhsUnitary)->Arg(4)->Arg(16);

static void BM_HaarSampleSymplectic(benchmark::State& state) {
    std::mt19937_64 rng(7);
    rmt::GroupSpec g{rmt::GroupKind::Symplectic, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(rmt::haar_sample(g, rng));
}
BENCHMARK(BM_HaarSampleSymplectic)->Arg(2)->Arg(6);

static void BM_AZetaProduct(benchmark::State& state) {
    ShiftSet s;
    s.alpha = {Complex(0.1)};
    s.beta = {Complex(0.12)};
    s.gamma = {Complex(0.15)};
    s.delta = {Complex(0.2)};
    EulerConfig cfg;
    cfg.prime_cutoff = state.range(0);
    cfg.tail_policy = EulerConfig::TailPolicy::Fixed;
    for (auto _ : state) benchmark::DoNotOptimize(a_zeta(s, cfg));
}
BENCHMARK(BM_AZetaProduct)->Arg(1000)->Arg(10000);

static void BM_EllipticTwistL(benchmark::State& state) {
    CoefficientTable coeffs = e11_coefficients_eta(40000);
    int64_t d = 1993;  // fundamental, coprime to 11
    for (auto _ : state)
        benchmark::DoNotOptimize(elliptic_twist_l(coeffs, d, Complex(0.1)));
}
BENCHMARK(BM_EllipticTwistL);

BENCHMARK_MAIN();
