#pragma once

#include <cstddef>
#include <vector>

namespace mixedcol {

/// Uniform vertical grid. Levels are stored bottom first: level 0 sits at
/// z = -h and level n_levels - 1 is the surface z = 0.
struct ColumnGrid {
    std::size_t n_levels = 0;
    double dz = 0.0;

    /// Builds the grid covering [-depth, 0]; depth must be a whole multiple of dz.
    static ColumnGrid from_depth(double depth, double dz);

    double depth() const noexcept { return static_cast<double>(n_levels - 1) * dz; }
    std::size_t surface() const noexcept { return n_levels - 1; }

    /// z coordinate (m, negative down) of a 0-based level.
    double z(std::size_t level) const noexcept {
        return (static_cast<double>(level) - static_cast<double>(n_levels - 1)) * dz;
    }

    std::vector<double> depths() const;
    void validate() const;
};

/// Zonal velocity, meridian velocity and density at one time level.
struct StateProfiles {
    std::vector<double> u;    // m/s
    std::vector<double> v;    // m/s
    std::vector<double> rho;  // kg/m^3

    std::size_t size() const noexcept { return u.size(); }

    /// Throws DimensionError unless all three arrays have `n` finite entries.
    void validate(std::size_t n) const;
};

/// Surface forcing, physical constants and bottom Dirichlet values.
struct ForcingAndConstants {
    double wind_u_air = 0.0;  // m/s
    double wind_v_air = 0.0;  // m/s
    double q_flux = -1e-6;    // kg m^-2 s^-1, negative stabilizes
    double g = 9.81;          // m/s^2
    double rho0 = 1025.0;     // kg/m^3
    double rho_a = 1.3;       // kg/m^3
    double c_d = 1.2e-3;
    double u_b = 0.0;
    double v_b = 0.0;
    double rho_b = 1025.0;

    void validate() const;
};

}  // namespace mixedcol
