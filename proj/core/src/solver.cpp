#include "mixedcol/solver.hpp"

#include <cmath>
#include <sstream>

#include "mixedcol/errors.hpp"

namespace mixedcol {

WindStress wind_stress(const ForcingAndConstants& forcing) {
    return {forcing.c_d * forcing.wind_u_air * std::abs(forcing.wind_u_air),
            forcing.c_d * forcing.wind_v_air * std::abs(forcing.wind_v_air)};
}

TridiagonalSystem assemble_increment_system(const std::vector<double>& x,
                                            const std::vector<double>& nu, double dz,
                                            double dt, double bottom_value,
                                            double surface_flux) {
    const std::size_t n = x.size();
    if (n < 2 || nu.size() != n) throw DimensionError("increment system needs matching arrays of length >= 2");

    const double inv_dz = 1.0 / dz;
    const double inv_dz2 = inv_dz * inv_dz;
    TridiagonalSystem sys(n);

    sys.diag[0] = 1.0;
    sys.rhs[0] = bottom_value - x[0];

    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double a = (nu[i] - nu[i - 1]) * inv_dz;
        const double below = x[i] - x[i - 1];
        const double above = x[i + 1] - x[i];
        sys.lower[i] = a * inv_dz - nu[i] * inv_dz2;
        sys.diag[i] = 1.0 / dt - a * inv_dz + 2.0 * nu[i] * inv_dz2;
        sys.upper[i] = -nu[i] * inv_dz2;
        sys.rhs[i] = a * below * inv_dz + nu[i] * (above - below) * inv_dz2;
    }

    // Surface flux row, divided through by nu_top / dz.
    const std::size_t top = n - 1;
    if (!(nu[top] > 0.0)) throw NumericalError("surface flux row is singular: zero eddy coefficient at the surface");
    sys.lower[top] = -1.0;
    sys.diag[top] = 1.0;
    sys.rhs[top] = surface_flux * dz / nu[top] - (x[top] - x[top - 1]);
    return sys;
}

void require_valid_coefficients(const EddyCoefficients& nu, const ColumnGrid& grid) {
    std::vector<std::size_t> levels;
    std::vector<double> depths;
    for (std::size_t i = 0; i < nu.nu2.size(); ++i) {
        if (nu.nu2[i] < 0.0 || nu.nu1[i] < 0.0) {
            levels.push_back(i);
            depths.push_back(grid.z(i));
        }
    }
    if (!levels.empty()) throw ModelInvalidError(std::move(levels), std::move(depths));
}

EddyCoefficients row_coefficients(const EddyCoefficients& nu) {
    EddyCoefficients out = nu;
    for (std::size_t i = 0; i + 1 < out.nu1.size(); ++i) out.nu1[i] = nu.nu1[i + 1];
    for (std::size_t i = 0; i + 1 < out.nu2.size(); ++i) out.nu2[i] = nu.nu2[i + 1];
    return out;
}

namespace {

void advance_field(std::vector<double>& x, const std::vector<double>& nu, double dz,
                   double dt, double bottom_value, double surface_flux,
                   std::size_t& non_dominant) {
    const auto sys = assemble_increment_system(x, nu, dz, dt, bottom_value, surface_flux);
    non_dominant += count_non_dominant_rows(sys);
    const auto delta = solve_tridiagonal(sys);
    for (std::size_t i = 1; i < x.size(); ++i) x[i] += delta[i];
    x[0] = bottom_value;
}

StateProfiles advance(const StateProfiles& state, const EddyCoefficients& nu,
                      const ColumnGrid& grid, const ForcingAndConstants& forcing, double dt,
                      std::size_t& non_dominant) {
    const auto stress = wind_stress(forcing);
    const double momentum_scale = forcing.rho_a / forcing.rho0;
    StateProfiles next = state;
    advance_field(next.u, nu.nu1, grid.dz, dt, forcing.u_b, momentum_scale * stress.x, non_dominant);
    advance_field(next.v, nu.nu1, grid.dz, dt, forcing.v_b, momentum_scale * stress.y, non_dominant);
    advance_field(next.rho, nu.nu2, grid.dz, dt, forcing.rho_b, forcing.q_flux, non_dominant);
    return next;
}

void check_step_inputs(const StateProfiles& state, const EddyCoefficients& nu,
                       const ColumnGrid& grid, double dt) {
    grid.validate();
    state.validate(grid.n_levels);
    if (nu.nu1.size() != grid.n_levels || nu.nu2.size() != grid.n_levels) {
        throw DimensionError("eddy coefficient length does not match grid");
    }
    if (!(dt > 0.0)) throw PreconditionError("time step must be positive");
}

}  // namespace

StateProfiles step(const StateProfiles& state, const EddyCoefficients& nu,
                   const ColumnGrid& grid, const ForcingAndConstants& forcing, double dt) {
    check_step_inputs(state, nu, grid, dt);
    require_valid_coefficients(nu, grid);
    std::size_t non_dominant = 0;
    return advance(state, nu, grid, forcing, dt, non_dominant);
}

double residual(const StateProfiles& previous, const StateProfiles& next) {
    const std::size_t n = previous.size();
    if (previous.v.size() != n || previous.rho.size() != n || next.u.size() != n ||
        next.v.size() != n || next.rho.size() != n) {
        throw DimensionError("residual needs states of equal length");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double du = next.u[i] - previous.u[i];
        const double dv = next.v[i] - previous.v[i];
        const double drho = next.rho[i] - previous.rho[i];
        sum += du * du + dv * dv + drho * drho;
    }
    return std::sqrt(sum);
}

RunResult integrate(StateProfiles init, const ClosureSpec& spec, const ColumnGrid& grid,
                    const ForcingAndConstants& forcing, const IntegrationOptions& options) {
    spec.validate();
    forcing.validate();
    grid.validate();
    init.validate(grid.n_levels);
    if (!(options.dt > 0.0)) throw PreconditionError("time step must be positive");

    RunResult result;
    if (init.u[0] != forcing.u_b || init.v[0] != forcing.v_b || init.rho[0] != forcing.rho_b) {
        std::ostringstream os;
        os << "bottom level reset to Dirichlet values (u,v,rho) = (" << forcing.u_b << ", "
           << forcing.v_b << ", " << forcing.rho_b << ") from (" << init.u[0] << ", "
           << init.v[0] << ", " << init.rho[0] << ")";
        result.log.push_back(os.str());
        init.u[0] = forcing.u_b;
        init.v[0] = forcing.v_b;
        init.rho[0] = forcing.rho_b;
    }

    // Density is carried as an anomaly about the bottom value so that late,
    // tiny increments are not lost to the spacing of doubles near rho0.
    const double rho_shift = forcing.rho_b;
    ForcingAndConstants shifted = forcing;
    shifted.rho_b = 0.0;
    StateProfiles state = std::move(init);
    for (double& rho : state.rho) rho -= rho_shift;
    auto restore = [rho_shift](StateProfiles s) {
        for (double& rho : s.rho) rho += rho_shift;
        return s;
    };

    result.residuals.reserve(options.max_steps);
    for (std::size_t n = 1; n <= options.max_steps; ++n) {
        const auto richardson = richardson_number(state, grid, shifted, options.shear_floor);
        const auto nu = coefficients_profile(spec, richardson);
        require_valid_coefficients(nu, grid);
        StateProfiles next = advance(state, row_coefficients(nu), grid, shifted, options.dt,
                                     result.non_dominant_rows);
        const double r = residual(state, next);
        if (!std::isfinite(r)) throw NumericalError("non-finite residual at step " + std::to_string(n));
        result.residuals.push_back(r);
        state = std::move(next);
        result.steps_taken = n;
        if (options.observer) options.observer(n, restore(state));
        if (r < options.stop_tolerance) {
            result.converged = true;
            break;
        }
    }
    if (result.non_dominant_rows > 0) {
        result.log.push_back(std::to_string(result.non_dominant_rows) +
                             " solver row(s) were not diagonally dominant");
    }

    result.nu_final = coefficients_profile(
        spec, richardson_number(state, grid, shifted, options.shear_floor));
    result.final_state = restore(std::move(state));
    return result;
}

}  // namespace mixedcol
