#include "mixedcol/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "mixedcol/errors.hpp"
#include "mixedcol/output.hpp"
#include "mixedcol/solver.hpp"

namespace mixedcol {

double curve_k(const ClosureSpec& spec, double richardson) {
    const double f1 = eval_f1(spec, richardson);
    const double f2 = eval_f2(spec, richardson);
    if (!(f2 > 0.0)) throw DomainError("k(R) needs a positive diffusivity");
    return f1 * f1 / f2;
}

double compute_C(const ForcingAndConstants& forcing) {
    if (forcing.q_flux == 0.0) throw DegenerateForcingError("equilibrium slope undefined for Q = 0");
    const auto stress = wind_stress(forcing);
    const double stress2 = stress.x * stress.x + stress.y * stress.y;
    return -forcing.rho_a * forcing.rho_a * stress2 /
           (forcing.g * forcing.q_flux * forcing.rho0);
}

EquilibriumRoot solve_equilibrium_richardson(const ClosureSpec& spec, double C,
                                             const RootScan& scan) {
    if (!(C > 0.0)) throw PreconditionError("equilibrium root needs C > 0");
    if (!(scan.r_max > 0.0) || scan.scan_points < 1) throw PreconditionError("bad root scan settings");

    auto gap = [&](double r) { return curve_k(spec, r) - C * r; };

    const double h = scan.r_max / static_cast<double>(scan.scan_points);
    EquilibriumRoot out;
    double lo = 0.0;
    double g_lo = gap(lo);
    bool bracketed = false;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    for (std::size_t i = 1; i <= scan.scan_points; ++i) {
        const double r = i == scan.scan_points ? scan.r_max : h * static_cast<double>(i);
        const double g_r = gap(r);
        if ((g_lo > 0.0) != (g_r > 0.0)) {
            ++out.crossings;
            if (!bracketed) {
                bracketed = true;
                bracket_lo = lo;
                bracket_hi = r;
            }
        }
        lo = r;
        g_lo = g_r;
    }
    if (!bracketed) throw NoEquilibriumError("k(R) - C R has no sign change on (0, r_max]");

    double a = bracket_lo;
    double b = bracket_hi;
    const bool rising = gap(b) > 0.0;
    double mid = 0.5 * (a + b);
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (a + b);
        const double g_mid = gap(mid);
        if (std::abs(g_mid) < 1e-12 * std::max(1.0, curve_k(spec, mid))) break;
        if ((g_mid > 0.0) == rising) {
            b = mid;
        } else {
            a = mid;
        }
        if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(mid)) break;
    }
    out.richardson = mid;
    return out;
}

StateProfiles analytic_profiles(const ClosureSpec& spec, double r_e,
                                const ForcingAndConstants& forcing, const ColumnGrid& grid) {
    spec.validate();
    grid.validate();
    const auto stress = wind_stress(forcing);
    const double f1 = eval_f1(spec, r_e);
    const double f2 = eval_f2(spec, r_e);
    const double u_slope = stress.x * forcing.rho_a / (forcing.rho0 * f1);
    const double v_slope = stress.y * forcing.rho_a / (forcing.rho0 * f1);
    const double rho_slope = forcing.q_flux / f2;
    const double h = grid.depth();

    StateProfiles out;
    out.u.resize(grid.n_levels);
    out.v.resize(grid.n_levels);
    out.rho.resize(grid.n_levels);
    for (std::size_t i = 0; i < grid.n_levels; ++i) {
        const double height = grid.z(i) + h;
        out.u[i] = forcing.u_b + u_slope * height;
        out.v[i] = forcing.v_b + v_slope * height;
        out.rho[i] = forcing.rho_b + rho_slope * height;
    }
    return out;
}

EquilibriumSolution solve_equilibrium(const ClosureSpec& spec,
                                      const ForcingAndConstants& forcing,
                                      const ColumnGrid& grid, const RootScan& scan) {
    EquilibriumSolution sol;
    sol.C = compute_C(forcing);
    const auto root = solve_equilibrium_richardson(spec, sol.C, scan);
    sol.r_e = root.richardson;
    sol.crossings = root.crossings;

    const auto stress = wind_stress(forcing);
    const double f1 = eval_f1(spec, sol.r_e);
    sol.u_slope = stress.x * forcing.rho_a / (forcing.rho0 * f1);
    sol.v_slope = stress.y * forcing.rho_a / (forcing.rho0 * f1);
    sol.rho_slope = forcing.q_flux / eval_f2(spec, sol.r_e);
    sol.profiles = analytic_profiles(spec, sol.r_e, forcing, grid);
    return sol;
}

std::vector<KhSample> kh_curves(const ClosureSpec& spec, double C, double r_min,
                                double r_max, std::size_t n_samples) {
    if (!(r_min < r_max) || n_samples < 2) throw PreconditionError("kh curves need r_min < r_max and >= 2 samples");
    std::vector<KhSample> out;
    out.reserve(n_samples);
    const double last = static_cast<double>(n_samples - 1);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double r = i + 1 == n_samples ? r_max
                                            : r_min + (r_max - r_min) * (static_cast<double>(i) / last);
        if (std::abs(1.0 + spec.gamma * r) < kSingularBand) continue;
        const double f2 = eval_f2(spec, r);
        if (!(f2 > 0.0)) continue;
        const double f1 = eval_f1(spec, r);
        out.push_back({r, f1 * f1 / f2, C * r});
    }
    return out;
}

void write_csv(std::ostream& out, std::span<const KhSample> samples) {
    out << "R,k,h\n";
    for (const auto& s : samples) {
        out << format_double(s.richardson) << ',' << format_double(s.k) << ','
            << format_double(s.h) << '\n';
    }
}

std::vector<double> rho_a_sensitivity(const ClosureSpec& spec, ForcingAndConstants forcing,
                                      std::span<const double> rho_a_values) {
    std::vector<double> out;
    out.reserve(rho_a_values.size());
    for (double rho_a : rho_a_values) {
        forcing.rho_a = rho_a;
        out.push_back(solve_equilibrium_richardson(spec, compute_C(forcing)).richardson);
    }
    return out;
}

}  // namespace mixedcol
