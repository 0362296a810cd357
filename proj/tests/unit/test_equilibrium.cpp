#include <gtest/gtest.h>

#include <cmath>

#include "mixedcol/equilibrium.hpp"
#include "mixedcol/errors.hpp"
#include "mixedcol/ingest.hpp"
#include "oracles.hpp"

using namespace mixedcol;

namespace {

const ClosureSpec kR224 = ClosureSpec::defaults(ClosureFamily::R224);

ForcingAndConstants case3_forcing() {
    auto config = CaseConfig::defaults(3);
    auto forcing = config.forcing();
    bottom_values_from(gen_case_init(3, config.grid()), forcing);
    return forcing;
}

double oracle_k(ClosureFamily family, double r) {
    const double f1 = oracle::f1(family, r);
    return f1 * f1 / oracle::f2(family, r);
}

/// Plain bisection on k - C R after a coarse scan from just above zero.
double oracle_root(ClosureFamily family, double C) {
    double lo = 1e-9;
    double hi = lo;
    for (double r = 1e-3; r < 1e3; r *= 1.01) {
        if (oracle_k(family, r) - C * r < 0.0) {
            hi = r;
            break;
        }
        lo = r;
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (oracle_k(family, mid) - C * mid > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST(CurveK, Examples) {
    EXPECT_NEAR(curve_k(kR224, 0.0), 1.01e-2 * 1.01e-2 / 1.011e-2, 1e-16);
    EXPECT_NEAR(curve_k(kR224, 0.0), 1.00900e-2, 1e-7);
    EXPECT_NEAR(curve_k(kR224, 0.0639), oracle_k(ClosureFamily::R224, 0.0639), 1e-15);
    EXPECT_THROW(curve_k(kR224, -0.2), SingularityError);
    EXPECT_THROW(curve_k(ClosureSpec::defaults(ClosureFamily::R213), -0.3), DomainError);
}

TEST(ComputeC, CaseThreeValue) {
    const auto f = case3_forcing();
    const double vx = 1.2e-3 * 5.4 * 5.4;
    const double vy = 1.2e-3 * 0.9 * 0.9;
    const double expected = -1.3 * 1.3 * (vx * vx + vy * vy) / (9.81 * -1e-6 * 1025.0);
    EXPECT_NEAR(compute_C(f), expected, 1e-12 * expected);
    EXPECT_NEAR(compute_C(f), 0.2060, 5e-5);
}

TEST(ComputeC, SignsAndDegenerate) {
    auto f = case3_forcing();
    f.wind_u_air = 0.0;
    f.wind_v_air = 0.0;
    EXPECT_EQ(compute_C(f), 0.0);
    f = case3_forcing();
    f.q_flux = 1e-6;
    EXPECT_LT(compute_C(f), 0.0);
    f.q_flux = 0.0;
    EXPECT_THROW(compute_C(f), DegenerateForcingError);
}

TEST(ComputeC, QuadraticInStress) {
    const auto base = case3_forcing();
    for (double s : {0.5, 2.0, 3.0, 0.1}) {
        auto f = base;
        f.wind_u_air *= std::sqrt(s);
        f.wind_v_air *= std::sqrt(s);
        EXPECT_NEAR(compute_C(f), s * s * compute_C(base), 1e-12 * compute_C(f));
        f = base;
        f.wind_u_air *= s;
        f.wind_v_air *= s;
        EXPECT_NEAR(compute_C(f), std::pow(s, 4) * compute_C(base), 1e-12 * compute_C(f));
    }
}

TEST(EquilibriumRoot, MatchesIndependentBisection) {
    const double C = compute_C(case3_forcing());
    for (auto family : {ClosureFamily::R213, ClosureFamily::R23, ClosureFamily::R224}) {
        const auto root = solve_equilibrium_richardson(ClosureSpec::defaults(family), C);
        EXPECT_NEAR(root.richardson, oracle_root(family, C), 1e-9) << to_string(family);
        EXPECT_GE(root.crossings, 1u);
    }
}

TEST(EquilibriumRoot, RootProperty) {
    for (double C : {0.01, 0.1, 0.205952, 1.0, 10.0, 1000.0}) {
        for (auto family : {ClosureFamily::R213, ClosureFamily::R23, ClosureFamily::R224}) {
            const auto spec = ClosureSpec::defaults(family);
            const double r = solve_equilibrium_richardson(spec, C).richardson;
            EXPECT_GT(r, 0.0);
            EXPECT_LT(std::abs(curve_k(spec, r) - C * r), 1e-10) << to_string(family) << " C=" << C;
        }
    }
}

TEST(EquilibriumRoot, DecreasesAsCGrows) {
    double prev = solve_equilibrium_richardson(kR224, 1e-3).richardson;
    for (double C = 2e-3; C < 1e3; C *= 1.5) {
        const double r = solve_equilibrium_richardson(kR224, C).richardson;
        EXPECT_LT(r, prev) << C;
        prev = r;
    }
    EXPECT_LT(prev, 1e-3);
}

TEST(EquilibriumRoot, Preconditions) {
    EXPECT_THROW(solve_equilibrium_richardson(kR224, 0.0), PreconditionError);
    EXPECT_THROW(solve_equilibrium_richardson(kR224, -1.0), PreconditionError);
    // far too shallow a line for the scanned interval
    RootScan narrow;
    narrow.r_max = 1e-3;
    narrow.scan_points = 10;
    EXPECT_THROW(solve_equilibrium_richardson(kR224, 1e-6, narrow), NoEquilibriumError);
}

TEST(EquilibriumSolution, CaseThreeReference) {
    const auto f = case3_forcing();
    const auto grid = CaseConfig::defaults(3).grid();
    const auto sol = solve_equilibrium(kR224, f, grid);
    EXPECT_NEAR(sol.C, 0.205952, 1e-6);
    EXPECT_NEAR(sol.r_e, 0.049192, 1e-6);
    EXPECT_GE(sol.r_e, 0.03);
    EXPECT_LE(sol.r_e, 0.10);
}

TEST(AnalyticProfiles, AnchoredAndLinear) {
    const auto f = case3_forcing();
    const auto grid = CaseConfig::defaults(3).grid();
    const auto sol = solve_equilibrium(kR224, f, grid);
    const auto& p = sol.profiles;
    EXPECT_EQ(p.u[0], f.u_b);
    EXPECT_EQ(p.v[0], f.v_b);
    EXPECT_EQ(p.rho[0], f.rho_b);
    for (const auto* field : {&p.u, &p.v, &p.rho}) {
        const double scale = std::abs(field->back() - field->front()) + std::abs(field->front());
        for (std::size_t i = 1; i + 1 < field->size(); ++i) {
            const double second = (*field)[i + 1] - 2.0 * (*field)[i] + (*field)[i - 1];
            EXPECT_LT(std::abs(second), 1e-14 * scale);
        }
    }
    const double f1 = oracle::f1(ClosureFamily::R224, sol.r_e);
    const double f2 = oracle::f2(ClosureFamily::R224, sol.r_e);
    const double vx = 1.2e-3 * 5.4 * 5.4;
    EXPECT_NEAR(sol.u_slope, vx * 1.3 / (1025.0 * f1), 1e-12);
    EXPECT_NEAR(sol.rho_slope, -1e-6 / f2, 1e-14);
}

TEST(AnalyticProfiles, RichardsonIsSelfConsistent) {
    const auto grid = CaseConfig::defaults(3).grid();
    for (auto family : {ClosureFamily::R213, ClosureFamily::R23, ClosureFamily::R224}) {
        for (double s : {0.6, 1.0, 1.7}) {
            auto f = case3_forcing();
            f.wind_u_air *= s;
            f.wind_v_air *= s;
            const auto spec = ClosureSpec::defaults(family);
            const auto sol = solve_equilibrium(spec, f, grid);
            const auto r = richardson_number(sol.profiles, grid, f);
            for (double x : r.values) {
                EXPECT_NEAR(x, sol.r_e, 1e-6 * sol.r_e) << to_string(family) << " s=" << s;
            }
        }
    }
}

TEST(AnalyticProfiles, ZeroWindSlopes) {
    auto f = case3_forcing();
    f.wind_u_air = 0.0;
    f.wind_v_air = 0.0;
    const auto grid = ColumnGrid::from_depth(100.0, 5.0);
    const double r_e = 0.05;
    const auto p = analytic_profiles(kR224, r_e, f, grid);
    for (std::size_t i = 0; i < grid.n_levels; ++i) {
        EXPECT_EQ(p.u[i], f.u_b);
        EXPECT_EQ(p.v[i], f.v_b);
        const double expected = f.rho_b + f.q_flux / oracle::f2(ClosureFamily::R224, r_e) * (grid.z(i) + 100.0);
        EXPECT_NEAR(p.rho[i], expected, 1e-11);
    }
}

TEST(KhCurves, SamplesAndSkips) {
    const auto curves = kh_curves(kR224, 0.2, 0.0, 0.5, 51);
    ASSERT_EQ(curves.size(), 51u);
    for (const auto& s : curves) {
        EXPECT_NEAR(s.h, 0.2 * s.richardson, 1e-15);
        EXPECT_NEAR(s.k, oracle_k(ClosureFamily::R224, s.richardson), 1e-14);
    }
    // R213 has non-positive f2 below the pole and the pole itself at -0.2
    const auto r213 = kh_curves(ClosureSpec::defaults(ClosureFamily::R213), 0.2, -0.5, 0.5, 11);
    for (const auto& s : r213) EXPECT_GT(s.richardson, -0.2);
    EXPECT_THROW(kh_curves(kR224, 0.2, 1.0, 1.0, 5), PreconditionError);
}

TEST(RhoASensitivity, BracketsReferenceValue) {
    const auto f = case3_forcing();
    const std::vector<double> rho_a{1.0, 1.1, 1.2, 1.3};
    const auto re = rho_a_sensitivity(kR224, f, rho_a);
    ASSERT_EQ(re.size(), 4u);
    for (std::size_t i = 1; i < re.size(); ++i) EXPECT_LT(re[i], re[i - 1]);
    EXPECT_GT(re.front(), 0.063935);
    EXPECT_LT(re.back(), 0.063935);
    EXPECT_NEAR(re.back(), solve_equilibrium_richardson(kR224, compute_C(f)).richardson, 1e-15);
}
