#include <benchmark/benchmark.h>

#include "gkdv/dsl.hpp"
#include "gkdv/floquet.hpp"
#include "gkdv/spectrum.hpp"
#include "gkdv/stability_map.hpp"
#include "gkdv/stokes.hpp"

namespace {

using namespace gkdv;

const DispersionSymbol& whitham2() {
    static const DispersionSymbol sym =
        DispersionSymbol::catalog(SymbolKind::whitham, {{"tth", 2.0}});
    return sym;
}

void bm_catalog_jet(benchmark::State& state) {
    double xi = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(whitham2().jet(xi));
        xi += 1e-9;
    }
}
BENCHMARK(bm_catalog_jet);

void bm_dsl_jet(benchmark::State& state) {
    const dsl::Expr expr = dsl::parse("sqrt(tanh(h*xi)/xi)");
    const ParamMap params = {{"h", 2.0}};
    double xi = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dsl::eval_jet(expr, params, xi));
        xi += 1e-9;
    }
}
BENCHMARK(bm_dsl_jet);

void bm_coefficients(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(compute_coefficients(whitham2()));
}
BENCHMARK(bm_coefficients);

void bm_newton_solve(benchmark::State& state) {
    const int n_modes = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_newton(whitham2(), 0.01, n_modes, 1e-12));
}
BENCHMARK(bm_newton_solve)->Arg(32)->Arg(64);

void bm_assemble_and_eig(benchmark::State& state) {
    const int n_modes = static_cast<int>(state.range(0));
    const StokesWave wave = solve_newton(whitham2(), 0.01, 20, 1e-13);
    for (auto _ : state) {
        const FloquetMatrix mat = assemble(whitham2(), wave, 0.01, n_modes);
        benchmark::DoNotOptimize(eigenvalues(mat));
    }
}
BENCHMARK(bm_assemble_and_eig)->Arg(32)->Arg(48)->Arg(64);

void bm_riesz_projector(benchmark::State& state) {
    const StokesWave wave = solve_newton(whitham2(), 0.01, 20, 1e-13);
    const FloquetMatrix mat = assemble(whitham2(), wave, 0.01, 32);
    for (auto _ : state) benchmark::DoNotOptimize(riesz_projector(mat, 0.06, 64));
}
BENCHMARK(bm_riesz_projector);

void bm_scan_cell(benchmark::State& state) {
    double ta = -4.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_cell(
            DispersionSymbol::catalog(SymbolKind::kawahara, {{"ta", ta}, {"tb", 1.0}})));
        ta += 1e-9;
    }
}
BENCHMARK(bm_scan_cell);

}  // namespace

BENCHMARK_MAIN();
