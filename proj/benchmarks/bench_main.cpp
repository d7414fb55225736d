#include <benchmark/benchmark.h>

#include "peirce/catalog.hpp"
#include "peirce/metrised.hpp"
#include "peirce/poly.hpp"
#include "peirce/solve.hpp"
#include "peirce/spectral.hpp"
#include "peirce/syzygy.hpp"

using namespace peirce;

static void BM_SolveIdempotents(benchmark::State& state) {
    const Algebra a = cubic_u1(static_cast<int>(state.range(0)));
    SolveConfig cfg;
    cfg.seed = 7;
    for (auto _ : state) {
        IdempotentSet set = solve_idempotents(a, cfg);
        benchmark::DoNotOptimize(set);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveIdempotents)->DenseRange(2, 6)->Complexity();

static void BM_SolveMatsuo(benchmark::State& state) {
    const Algebra a = matsuo_3c(0.3);
    SolveConfig cfg;
    cfg.seed = 7;
    for (auto _ : state) {
        IdempotentSet set = solve_idempotents(a, cfg);
        benchmark::DoNotOptimize(set);
    }
}
BENCHMARK(BM_SolveMatsuo);

static void BM_CharPoly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Algebra a = cubic_u1(n);
    Vec x = Vec::Constant(n, Complex(0.6, 0.1));
    for (auto _ : state) {
        CharPoly p = a.char_poly(x);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_CharPoly)->DenseRange(2, 12, 2);

static void BM_SpectrumOf(benchmark::State& state) {
    const Algebra a = matsuo_3c(0.3);
    const Vec e1 = (Vec(3) << Complex(1.0), Complex(0.0), Complex(0.0)).finished();
    for (auto _ : state) {
        Spectrum s = spectrum_of(a, e1);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SpectrumOf);

static void BM_ExtremalSearch(benchmark::State& state) {
    const CubicForm u = cubic_form_circle(0.5);
    for (auto _ : state) {
        ExtremalResult r = extremal_idempotent(u, 8, 7);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ExtremalSearch);

static void BM_VerifySyzygies(benchmark::State& state) {
    SolveConfig cfg;
    cfg.seed = 7;
    const IdempotentSet set = solve_idempotents(matsuo_3c(0.3), cfg);
    for (auto _ : state) {
        SyzygyReport rep = verify_syzygies(set);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_VerifySyzygies);

BENCHMARK_MAIN();
