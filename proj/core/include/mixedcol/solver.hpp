#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mixedcol/closures.hpp"
#include "mixedcol/column.hpp"
#include "mixedcol/tridiagonal.hpp"

namespace mixedcol {

/// Bulk wind-stress forcing (m^2/s^2).
struct WindStress {
    double x = 0.0;
    double y = 0.0;
};

/// Signed quadratic drag: Vx = c_d u_air |u_air|, likewise for Vy, so the
/// stress points along the wind.
WindStress wind_stress(const ForcingAndConstants& forcing);

/// Which of the three transported fields a system is built for.
enum class Field { U, V, Rho };

/// Assembles the implicit system for one field in increment form: the
/// unknown is x^{n+1} - x^n. Interior rows discretize
///   dx/dt = a_i (x_i - x_{i-1})/dz + nu_i (x_{i+1} - 2 x_i + x_{i-1})/dz^2,
///   a_i = (nu_i - nu_{i-1})/dz,
/// with nu frozen at time n. Row 0 is the bottom Dirichlet value and the last
/// row the surface flux condition nu_top (x_top - x_{top-1})/dz = flux.
TridiagonalSystem assemble_increment_system(const std::vector<double>& x,
                                            const std::vector<double>& nu,
                                            double dz, double dt,
                                            double bottom_value,
                                            double surface_flux);

/// One implicit time step of all three fields. Requires nu2 >= 0 everywhere
/// (throws ModelInvalidError otherwise) and dt > 0.
StateProfiles step(const StateProfiles& state, const EddyCoefficients& nu,
                   const ColumnGrid& grid, const ForcingAndConstants& forcing,
                   double dt);

/// Euclidean norm of the change over every level of u, v and rho.
double residual(const StateProfiles& previous, const StateProfiles& next);

/// Coefficients as the scheme consumes them. Level i of `nu` is built from
/// the gradients between i-1 and i, while row i of the scheme uses nu_i for
/// the exchange between i and i+1; so row i takes the coefficient of level
/// i+1 and the surface keeps its own. The level lists are copied unchanged.
EddyCoefficients row_coefficients(const EddyCoefficients& nu);

/// Throws ModelInvalidError listing every level where nu1 or nu2 is negative.
void require_valid_coefficients(const EddyCoefficients& nu, const ColumnGrid& grid);

struct IntegrationOptions {
    double dt = 60.0;
    std::size_t max_steps = 2880;
    double stop_tolerance = 1e-8;
    double shear_floor = kDefaultShearFloor;
    /// Called after every accepted step with (step number, new state).
    std::function<void(std::size_t, const StateProfiles&)> observer;
};

struct RunResult {
    StateProfiles final_state;
    std::vector<double> residuals;      // one entry per step taken
    EddyCoefficients nu_final;          // level coefficients of final_state
    std::size_t steps_taken = 0;
    bool converged = false;             // last residual < stop_tolerance
    std::size_t non_dominant_rows = 0;  // summed over all solves
    std::vector<std::string> log;
};

/// Runs {R -> nu -> validate -> step -> residual} until the residual drops
/// below the stop tolerance or max_steps is reached. Validation sees the
/// level coefficients; the step gets row_coefficients() of them. The bottom level of
/// `init` is overwritten with the Dirichlet values before the first step.
RunResult integrate(StateProfiles init, const ClosureSpec& spec,
                    const ColumnGrid& grid, const ForcingAndConstants& forcing,
                    const IntegrationOptions& options);

}  // namespace mixedcol
