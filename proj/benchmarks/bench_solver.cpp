#include <benchmark/benchmark.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "mixedcol/cases.hpp"
#include "mixedcol/closures.hpp"
#include "mixedcol/solver.hpp"
#include "mixedcol/tridiagonal.hpp"

using namespace mixedcol;

namespace {

TridiagonalSystem diffusion_system(std::size_t n) {
    TridiagonalSystem sys(n);
    for (std::size_t i = 0; i < n; ++i) {
        sys.lower[i] = -1.0;
        sys.diag[i] = 3.0;
        sys.upper[i] = -1.0;
        sys.rhs[i] = std::sin(0.1 * static_cast<double>(i));
    }
    return sys;
}

StateProfiles smooth_state(const ColumnGrid& grid) {
    StateProfiles s;
    for (std::size_t i = 0; i < grid.n_levels; ++i) {
        const double z = grid.z(i);
        s.u.push_back(0.3 * std::exp(-z * z / 200.0));
        s.v.push_back(0.05 * std::cos(z / 15.0));
        s.rho.push_back(1024.0 - 0.01 * z);
    }
    return s;
}

}  // namespace

static void BM_SolveTridiagonal(benchmark::State& state) {
    const auto sys = diffusion_system(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_tridiagonal(sys));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveTridiagonal)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

static void BM_Step(benchmark::State& state) {
    const ColumnGrid grid{static_cast<std::size_t>(state.range(0)), 100.0 / static_cast<double>(state.range(0) - 1)};
    ForcingAndConstants forcing;
    forcing.wind_u_air = 8.1;
    forcing.wind_v_air = 2.1;
    const auto s = smooth_state(grid);
    forcing.u_b = s.u[0];
    forcing.v_b = s.v[0];
    forcing.rho_b = s.rho[0];
    const auto spec = ClosureSpec::defaults(ClosureFamily::R224);
    const auto nu = coefficients_profile(spec, richardson_number(s, grid, forcing));
    for (auto _ : state) {
        benchmark::DoNotOptimize(step(s, nu, grid, forcing, 60.0));
    }
}
BENCHMARK(BM_Step)->Arg(21)->Arg(101)->Arg(1001);

static void BM_CoefficientsProfile(benchmark::State& state) {
    const ColumnGrid grid{101, 1.0};
    ForcingAndConstants forcing;
    const auto s = smooth_state(grid);
    const auto spec = ClosureSpec::defaults(ClosureFamily::R213);
    for (auto _ : state) {
        benchmark::DoNotOptimize(coefficients_profile(spec, richardson_number(s, grid, forcing)));
    }
}
BENCHMARK(BM_CoefficientsProfile);

static void BM_CaseOneHour(benchmark::State& state) {
    auto config = CaseConfig::defaults(1);
    config.hours = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_case(config));
    }
}
BENCHMARK(BM_CaseOneHour)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
