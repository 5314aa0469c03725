#include <benchmark/benchmark.h>

#include "gamma_forms/criterion.hpp"
#include "gamma_forms/hypergeometric.hpp"
#include "gamma_forms/numerics.hpp"
#include "gamma_forms/representations.hpp"

using namespace gamma_forms;

static void BM_LcmUpto(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lcm_upto(n));
    }
}
BENCHMARK(BM_LcmUpto)->Arg(100)->Arg(1000);

static void BM_HarmonicExact(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(harmonic(n));
    }
}
BENCHMARK(BM_HarmonicExact)->Arg(128)->Arg(512);

static void BM_SnFactored(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(s_n_factored(n));
    }
}
BENCHMARK(BM_SnFactored)->Arg(8)->Arg(25);

static void BM_DecomposeRn(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_Rn(n));
    }
}
BENCHMARK(BM_DecomposeRn)->Arg(6)->Arg(12);

static void BM_Eval3F2_UnitZeta2(benchmark::State& state) {
    const mpfr_prec_t prec = state.range(0);
    const auto p = HypergeometricParams::from_rationals(1, 1, 1, 2, 2, prec + 32);
    F32Options opt;
    opt.max_terms = 20000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_3f2_detailed(p, prec, opt));
    }
}
BENCHMARK(BM_Eval3F2_UnitZeta2)->Arg(64)->Arg(128);

static void BM_LogFactored(benchmark::State& state) {
    const FactoredInteger s = s_n_factored(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_factored(s, 256));
    }
}
BENCHMARK(BM_LogFactored)->Arg(6)->Arg(12);

static void BM_InSeries(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(in_series(n, 128));
    }
}
BENCHMARK(BM_InSeries)->Arg(2)->Arg(4);

static void BM_InClosedForm(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(in_closed_form(n, 256));
    }
}
BENCHMARK(BM_InClosedForm)->Arg(2)->Arg(6);

static void BM_CheckCriterion(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_criterion(static_cast<unsigned>(state.range(0)), 128));
    }
}
BENCHMARK(BM_CheckCriterion)->Arg(2);

BENCHMARK_MAIN();
