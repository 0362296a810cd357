#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "mixedcol/closures.hpp"
#include "mixedcol/errors.hpp"
#include "oracles.hpp"

using namespace mixedcol;

namespace {

const ClosureSpec kR213 = ClosureSpec::defaults(ClosureFamily::R213);
const ClosureSpec kR23 = ClosureSpec::defaults(ClosureFamily::R23);
const ClosureSpec kR224 = ClosureSpec::defaults(ClosureFamily::R224);

StateProfiles column(std::vector<double> u, std::vector<double> v, std::vector<double> rho) {
    return {std::move(u), std::move(v), std::move(rho)};
}

}  // namespace

TEST(ClosureFamilyNames, RoundTrip) {
    for (auto f : {ClosureFamily::R213, ClosureFamily::R23, ClosureFamily::R224}) {
        EXPECT_EQ(parse_family(to_string(f)), f);
    }
    EXPECT_EQ(parse_family("R224"), ClosureFamily::R224);
    EXPECT_FALSE(parse_family("r22"));
    EXPECT_FALSE(parse_family(""));
}

TEST(ClosureSpecs, DefaultsAndPoles) {
    EXPECT_DOUBLE_EQ(kR213.singular_richardson(), -0.2);
    EXPECT_DOUBLE_EQ(kR224.singular_richardson(), -0.2);
    EXPECT_DOUBLE_EQ(kR23.singular_richardson(), -0.1);
    EXPECT_NO_THROW(kR213.validate());
    EXPECT_NO_THROW(kR23.validate());
    EXPECT_NO_THROW(kR224.validate());
    EXPECT_NO_THROW(ClosureSpec::opa().validate());
    EXPECT_EQ(kR224.beta2, 1e-3);
}

TEST(ClosureSpecs, RejectsBadCoefficients) {
    auto s = kR213;
    s.alpha1 = 0.0;
    EXPECT_THROW(s.validate(), PreconditionError);
    s = kR23;
    s.beta2 = 0.0;
    EXPECT_THROW(s.validate(), PreconditionError);
    s = kR224;
    s.gamma = 7.0;
    EXPECT_THROW(s.validate(), PreconditionError);
}

TEST(EvalF1, Examples) {
    EXPECT_NEAR(eval_f1(kR213, 0.0), 1.01e-2, 1e-15);
    EXPECT_NEAR(eval_f1(kR23, 0.05), 4.454e-2, 1e-5);
    EXPECT_NEAR(eval_f1(kR23, 0.05), oracle::f1(ClosureFamily::R23, 0.05), 1e-16);
    EXPECT_NEAR(eval_f1(kR224, -0.3), 4.01e-2, 1e-14);
}

TEST(EvalF2, Examples) {
    EXPECT_NEAR(eval_f2(kR213, -0.3), -8.019e-2, 1e-14);
    EXPECT_NEAR(eval_f2(kR23, -0.2), -9.999e-2, 1e-14);
    EXPECT_NEAR(eval_f2(kR224, -0.3), 1.60410e-1, 1e-14);
}

TEST(EvalF1F2, SingularAtPole) {
    EXPECT_THROW(eval_f1(kR213, -0.2), SingularityError);
    EXPECT_THROW(eval_f2(kR213, -0.2), SingularityError);
    EXPECT_THROW(eval_f1(kR224, -0.2), SingularityError);
    EXPECT_THROW(eval_f2(kR224, -0.2), SingularityError);
    EXPECT_THROW(eval_f1(kR23, -0.1), SingularityError);
    EXPECT_THROW(eval_f2(kR23, -0.1), SingularityError);
    try {
        eval_f2(kR23, -0.1);
    } catch (const SingularityError& e) {
        EXPECT_EQ(e.richardson(), -0.1);
    }
    // R23 has its pole at -0.1 only
    EXPECT_NO_THROW(eval_f2(kR23, -0.2));
}

TEST(EvalF1F2, MatchIndependentFormulas) {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> dist(-5.0, 50.0);
    for (int i = 0; i < 20000; ++i) {
        const double r = dist(gen);
        for (const auto& s : {kR213, kR23, kR224}) {
            const double f1 = oracle::f1(s.family, r);
            const double f2 = oracle::f2(s.family, r);
            EXPECT_NEAR(eval_f1(s, r), f1, 1e-12 * std::abs(f1));
            EXPECT_NEAR(eval_f2(s, r), f2, 1e-12 * std::abs(f2) + 1e-300);
        }
    }
}

TEST(ClosureProperties, ViscosityIdenticalForR213AndR224) {
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> dist(-10.0, 1e4);
    for (int i = 0; i < 100000; ++i) {
        const double r = dist(gen);
        if (r == -0.2) continue;
        ASSERT_EQ(eval_f1(kR213, r), eval_f1(kR224, r)) << r;
    }
}

TEST(ClosureProperties, R224DiffusivityAboveBackground) {
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> dist(-10.0, 1e4);
    for (int i = 0; i < 100000; ++i) {
        const double r = dist(gen);
        if (r == -0.2) continue;
        ASSERT_GT(eval_f2(kR224, r), kR224.alpha2) << r;
    }
}

TEST(ClosureProperties, OrderingsForPositiveR) {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> dist(0.0, 1e4);
    for (int i = 0; i < 100000; ++i) {
        const double r = dist(gen);
        if (r == 0.0) continue;
        ASSERT_GT(eval_f1(kR23, r), eval_f1(kR213, r)) << r;
        ASSERT_GT(eval_f2(kR213, r), eval_f2(kR224, r)) << r;
    }
    EXPECT_GT(eval_f1(kR23, 0.0), eval_f1(kR213, 0.0));
    EXPECT_EQ(eval_f2(kR213, 0.0), eval_f2(kR224, 0.0));
}

TEST(ClosureProperties, NegativeDiffusivityBelowPole) {
    std::mt19937_64 gen(4);
    std::uniform_real_distribution<double> below213(-2.0, -0.2);
    std::uniform_real_distribution<double> below23(-2.0, -0.1);
    for (int i = 0; i < 100000; ++i) {
        const double a = below213(gen);
        if (a != -0.2) {
            ASSERT_LT(eval_f2(kR213, a), 0.0) << a;
        }
        const double b = below23(gen);
        if (b != -0.1) {
            ASSERT_LT(eval_f2(kR23, b), 0.0) << b;
        }
    }
    ASSERT_LT(eval_f2(kR213, -0.2000001), 0.0);
    ASSERT_LT(eval_f2(kR23, -0.1000001), 0.0);
}

TEST(ClosureProperties, DiffusivitySignReturnsFarBelowPole) {
    // alpha2 outweighs the decaying pole term once R is a few units negative.
    EXPECT_GT(eval_f2(kR213, -10.0), 0.0);
    EXPECT_GT(eval_f2(kR23, -10.0), 0.0);
}

TEST(ClosureProperties, StrictlyDecreasingAbovePole) {
    for (const auto& s : {kR213, kR23, kR224}) {
        double prev_f1 = eval_f1(s, s.singular_richardson() + 1e-3);
        double prev_f2 = eval_f2(s, s.singular_richardson() + 1e-3);
        for (double r = s.singular_richardson() + 2e-3; r < 50.0; r += 1e-3) {
            const double f1 = eval_f1(s, r);
            const double f2 = eval_f2(s, r);
            ASSERT_LT(f1, prev_f1) << to_string(s.family) << " R=" << r;
            ASSERT_LT(f2, prev_f2) << to_string(s.family) << " R=" << r;
            prev_f1 = f1;
            prev_f2 = f2;
        }
    }
}

TEST(Richardson, UniformDensityGivesZero) {
    const auto grid = ColumnGrid::from_depth(4.0, 1.0);
    const auto st = column({0, 0.1, 0.3, 0.2, 0.5}, {0, 0, 0, 0, 0}, {1025, 1025, 1025, 1025, 1025});
    const auto r = richardson_number(st, grid, ForcingAndConstants{});
    for (double x : r.values) EXPECT_EQ(x, 0.0);
}

TEST(Richardson, HandEvaluatedExample) {
    const auto grid = ColumnGrid::from_depth(2.0, 1.0);
    // rho decreases upward by 0.01 per m, u increases upward by 0.01 per m
    const auto st = column({0.0, 0.01, 0.02}, {0, 0, 0}, {1025.02, 1025.01, 1025.0});
    ForcingAndConstants c;
    const auto r = richardson_number(st, grid, c);
    const double expected = (9.81 / 1025.0) * 0.01 / 1e-4;
    for (double x : r.values) EXPECT_NEAR(x, expected, 1e-9);
    EXPECT_NEAR(r.values[2], 0.9571, 1e-4);
}

TEST(Richardson, ZeroShearUsesFloor) {
    const auto grid = ColumnGrid::from_depth(3.0, 1.0);
    const auto st = column({0.1, 0.1, 0.1, 0.1}, {0, 0, 0, 0}, {1026, 1025.5, 1025.2, 1025});
    const auto r = richardson_number(st, grid, ForcingAndConstants{});
    for (double x : r.values) {
        EXPECT_TRUE(std::isfinite(x));
        EXPECT_GT(x, 1e8);
    }
    EXPECT_EQ(r.shear_floor, kDefaultShearFloor);
}

TEST(Richardson, BottomCopiesNeighbour) {
    const auto grid = ColumnGrid::from_depth(3.0, 1.0);
    const auto st = column({0.0, 0.05, 0.07, 0.2}, {0, 0.01, 0, 0}, {1026, 1025.5, 1025.2, 1025});
    const auto r = richardson_number(st, grid, ForcingAndConstants{});
    EXPECT_EQ(r.values[0], r.values[1]);
}

TEST(Richardson, InvariantUnderConstantShifts) {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    const auto grid = ColumnGrid::from_depth(20.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        StateProfiles st;
        for (std::size_t i = 0; i < grid.n_levels; ++i) {
            st.u.push_back(d(gen));
            st.v.push_back(d(gen));
            st.rho.push_back(1025.0 + d(gen));
        }
        const auto base = richardson_number(st, grid, ForcingAndConstants{});
        auto shifted = st;
        for (auto& x : shifted.u) x += 0.375;
        for (auto& x : shifted.v) x -= 1.25;
        for (auto& x : shifted.rho) x += 2.0;
        const auto moved = richardson_number(shifted, grid, ForcingAndConstants{});
        for (std::size_t i = 0; i < grid.n_levels; ++i) {
            EXPECT_NEAR(moved.values[i], base.values[i], 1e-9 * (1.0 + std::abs(base.values[i])));
        }
    }
}

TEST(Richardson, Errors) {
    const auto grid = ColumnGrid::from_depth(3.0, 1.0);
    const auto st = column({0, 0, 0}, {0, 0, 0}, {1, 1, 1});
    EXPECT_THROW(richardson_number(st, grid, ForcingAndConstants{}), DimensionError);
    const auto ok = column({0, 0, 0, 0}, {0, 0, 0, 0}, {1, 1, 1, 1});
    EXPECT_THROW(richardson_number(ok, grid, ForcingAndConstants{}, 0.0), PreconditionError);
}

TEST(CoefficientsProfile, ZeroRichardsonColumn) {
    const auto nu = coefficients_profile(kR213, {std::vector<double>(6, 0.0)});
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_NEAR(nu.nu1[i], 1.01e-2, 1e-16);
        EXPECT_NEAR(nu.nu2[i], 1.011e-2, 1e-16);
    }
    EXPECT_TRUE(nu.negative_nu2_levels.empty());
    EXPECT_TRUE(nu.singular_levels.empty());
}

TEST(CoefficientsProfile, FlagsNegativeDiffusivity) {
    const RichardsonProfile r{{0.1, 0.0, -0.3, 0.5}};
    const auto bad = coefficients_profile(kR213, r);
    ASSERT_EQ(bad.negative_nu2_levels, std::vector<std::size_t>{2});
    EXPECT_LT(bad.nu2[2], 0.0);
    const auto fine = coefficients_profile(kR224, r);
    EXPECT_TRUE(fine.negative_nu2_levels.empty());
}

TEST(CoefficientsProfile, CapsPoles) {
    const RichardsonProfile r{{0.0, -0.2, -0.1 + 1e-10, 0.0}};
    const auto nu213 = coefficients_profile(kR213, r);
    EXPECT_EQ(nu213.singular_levels, std::vector<std::size_t>{1});
    EXPECT_EQ(nu213.nu1[1], kSingularCap);
    EXPECT_EQ(nu213.nu2[1], kSingularCap);
    const auto nu23 = coefficients_profile(kR23, r);
    EXPECT_EQ(nu23.singular_levels, std::vector<std::size_t>{2});
    for (double x : nu23.nu1) EXPECT_TRUE(std::isfinite(x));
}

TEST(CoefficientTable, UniformSamples) {
    const auto t = coefficient_table(kR213, 0.0, 1.0, 3);
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_EQ(t.rows[0].richardson, 0.0);
    EXPECT_EQ(t.rows[1].richardson, 0.5);
    EXPECT_EQ(t.rows[2].richardson, 1.0);
    EXPECT_NEAR(t.rows[0].f1, 1.01e-2, 1e-15);
    EXPECT_NEAR(t.rows[1].f1, 1e-4 + 1e-2 / 12.25, 1e-15);
    EXPECT_NEAR(t.rows[1].f1, 9.1633e-4, 1e-8);
    EXPECT_NEAR(t.rows[2].f1, 3.778e-4, 1e-7);
    for (const auto& row : t.rows) {
        EXPECT_DOUBLE_EQ(row.f2, oracle::f2(ClosureFamily::R213, row.richardson));
    }
}

TEST(CoefficientTable, SkipsPole) {
    const auto t = coefficient_table(kR23, -0.2, 0.0, 3);
    ASSERT_EQ(t.skipped.size(), 1u);
    EXPECT_DOUBLE_EQ(t.skipped[0], -0.1);
    EXPECT_EQ(t.rows.size(), 2u);
}

TEST(CoefficientTable, RejectsDegenerateRange) {
    EXPECT_THROW(coefficient_table(kR224, 0.0, 0.0, 2), PreconditionError);
    EXPECT_THROW(coefficient_table(kR224, 0.0, 1.0, 1), PreconditionError);
}

TEST(CoefficientTable, CsvRoundTrips) {
    const auto t = coefficient_table(kR224, -0.5, 2.0, 11);
    std::ostringstream os;
    write_csv(os, t);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "R,f1,f2");
    std::size_t n = 0;
    while (std::getline(is, line)) {
        std::istringstream row(line);
        std::string a, b, c;
        std::getline(row, a, ',');
        std::getline(row, b, ',');
        std::getline(row, c, ',');
        EXPECT_EQ(std::stod(a), t.rows[n].richardson);
        EXPECT_EQ(std::stod(b), t.rows[n].f1);
        EXPECT_EQ(std::stod(c), t.rows[n].f2);
        ++n;
    }
    EXPECT_EQ(n, t.rows.size());
}
