#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "mixedcol/closures.hpp"
#include "mixedcol/column.hpp"

namespace mixedcol {

/// k(R) = f1(R)^2 / f2(R). Throws SingularityError at the pole and
/// DomainError where f2 <= 0.
double curve_k(const ClosureSpec& spec, double richardson);

/// Slope of the line h(R) = C R: C = -rho_a^2 (Vx^2 + Vy^2) / (g Q rho0).
/// Throws DegenerateForcingError when Q == 0.
double compute_C(const ForcingAndConstants& forcing);

struct RootScan {
    double r_max = 1e3;
    std::size_t scan_points = 10000;
};

struct EquilibriumRoot {
    double richardson = 0.0;
    /// Sign changes of k - C R seen during the scan.
    std::size_t crossings = 0;
};

/// Smallest positive root of k(R) - C R on (0, r_max]. Requires C > 0;
/// throws NoEquilibriumError when the scan finds no sign change.
EquilibriumRoot solve_equilibrium_richardson(const ClosureSpec& spec, double C,
                                             const RootScan& scan = {});

/// Linear steady state anchored at the bottom values:
///   u = u_b + Vx rho_a / (rho0 f1(Re)) (z + h), v likewise,
///   rho = rho_b + Q / f2(Re) (z + h).
StateProfiles analytic_profiles(const ClosureSpec& spec, double r_e,
                                const ForcingAndConstants& forcing,
                                const ColumnGrid& grid);

struct EquilibriumSolution {
    double r_e = 0.0;
    double C = 0.0;
    std::size_t crossings = 0;
    double u_slope = 0.0;    // s^-1
    double v_slope = 0.0;    // s^-1
    double rho_slope = 0.0;  // kg m^-4
    StateProfiles profiles;
};

EquilibriumSolution solve_equilibrium(const ClosureSpec& spec,
                                      const ForcingAndConstants& forcing,
                                      const ColumnGrid& grid,
                                      const RootScan& scan = {});

struct KhSample {
    double richardson;
    double k;
    double h;
};

/// Samples k and h = C R on [r_min, r_max] for plotting; pole and
/// non-positive-f2 points are dropped.
std::vector<KhSample> kh_curves(const ClosureSpec& spec, double C, double r_min,
                                double r_max, std::size_t n_samples);

/// CSV with header `R,k,h`.
void write_csv(std::ostream& out, std::span<const KhSample> samples);

/// Re for each air density in `rho_a_values`, other forcing held fixed.
std::vector<double> rho_a_sensitivity(const ClosureSpec& spec,
                                      ForcingAndConstants forcing,
                                      std::span<const double> rho_a_values);

}  // namespace mixedcol
