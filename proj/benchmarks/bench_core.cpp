// Microbenchmarks for the hot paths: special-function evaluation, state
// evaluation, operator residuals and the grid eigensolver.

#include <benchmark/benchmark.h>

#include <cmath>

#include "curvos/crs.hpp"
#include "curvos/higgs.hpp"
#include "curvos/model.hpp"
#include "curvos/oracle.hpp"
#include "curvos/special.hpp"
#include "curvos/transform.hpp"

using namespace curvos;

namespace {

const PhysicalParameters& params() {
    static const PhysicalParameters p = canonical_parameters();
    return p;
}

std::vector<double> bench_grid(int points) {
    return radial_grid_from_upsilon(params().lambda, 0.1, 1.4, points);
}

void bm_gauss_2f1(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double z = 0.12;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_2f1_terminating(n, n + 2.1, 1.0, z));
        z = z < 0.9 ? z + 1e-6 : 0.12;
    }
}
BENCHMARK(bm_gauss_2f1)->Arg(2)->Arg(8)->Arg(32);

void bm_higgs_wavefunction_eval(benchmark::State& state) {
    const RadialState st = higgs_wavefunction(params(), 2, 1);
    double r = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(st.wavefunction(r));
        r = r < 5.0 ? r + 1e-6 : 0.3;
    }
}
BENCHMARK(bm_higgs_wavefunction_eval);

void bm_crs_wavefunction_eval(benchmark::State& state) {
    const CrsState st = crs_eigenfunction(params(), 2, 1);
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(st.wavefunction(x));
        x = x < 2.0 ? x + 1e-6 : 0.3;
    }
}
BENCHMARK(bm_crs_wavefunction_eval);

void bm_mapped_state_eval(benchmark::State& state) {
    const CrsState st = crs_eigenfunction(params(), 1, 1);
    const CoordinateMap map{params().lambda};
    const auto mapped = map_wavefunction_to_radial(st.wavefunction, map);
    double r = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mapped(r));
        r = r < 5.0 ? r + 1e-6 : 0.3;
    }
}
BENCHMARK(bm_mapped_state_eval);

void bm_residual_norm(benchmark::State& state) {
    const RadialPotential V = harmonic_radial_potential(params());
    const RadialState st = higgs_wavefunction(params(), 1, 1);
    const auto grid = bench_grid(200);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            residual_norm(V, params(), 1, st.wavefunction, st.energy, grid));
}
BENCHMARK(bm_residual_norm);

void bm_discretize(benchmark::State& state) {
    const RadialPotential V = harmonic_radial_potential(params());
    OracleConfig config;
    config.grid_points = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(discretize(V, params(), 0, config));
}
BENCHMARK(bm_discretize)->Arg(500)->Arg(2000);

void bm_lowest_eigenvalues(benchmark::State& state) {
    const RadialPotential V = harmonic_radial_potential(params());
    OracleConfig config;
    config.grid_points = static_cast<int>(state.range(0));
    config.num_eigenvalues = 3;
    const RadialEigenproblem problem = discretize(V, params(), 0, config);
    for (auto _ : state)
        benchmark::DoNotOptimize(lowest_eigenvalues(problem, 3));
}
BENCHMARK(bm_lowest_eigenvalues)->Arg(500)->Arg(1000);

void bm_line_ground_energy(benchmark::State& state) {
    const double eps = params().epsilon();
    auto well = [](double t) { return 6.0 * std::tanh(t) * std::tanh(t); };
    for (auto _ : state)
        benchmark::DoNotOptimize(
            line_ground_energy(well, eps * params().lambda, 8.0, 1201));
}
BENCHMARK(bm_line_ground_energy);

} // namespace

BENCHMARK_MAIN();
