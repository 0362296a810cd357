#include "mixedcol/column.hpp"

#include <cmath>
#include <string>

#include "mixedcol/errors.hpp"

namespace mixedcol {

ColumnGrid ColumnGrid::from_depth(double depth, double dz) {
    if (!(dz > 0.0) || !(depth > 0.0)) {
        throw PreconditionError("grid needs positive depth and spacing");
    }
    const double cells = depth / dz;
    const double whole = std::round(cells);
    if (whole < 1.0 || std::abs(cells - whole) > 1e-9 * whole) {
        throw PreconditionError("depth " + std::to_string(depth) +
                                " is not a multiple of dz " + std::to_string(dz));
    }
    return ColumnGrid{static_cast<std::size_t>(whole) + 1, dz};
}

std::vector<double> ColumnGrid::depths() const {
    std::vector<double> z(n_levels);
    for (std::size_t i = 0; i < n_levels; ++i) z[i] = this->z(i);
    return z;
}

void ColumnGrid::validate() const {
    if (n_levels < 2) throw PreconditionError("grid needs at least two levels");
    if (!(dz > 0.0) || !std::isfinite(dz)) throw PreconditionError("grid spacing must be positive");
}

void StateProfiles::validate(std::size_t n) const {
    if (u.size() != n || v.size() != n || rho.size() != n) {
        throw DimensionError("state has lengths " + std::to_string(u.size()) + "/" +
                             std::to_string(v.size()) + "/" + std::to_string(rho.size()) +
                             ", expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(u[i]) || !std::isfinite(v[i]) || !std::isfinite(rho[i])) {
            throw NumericalError("non-finite state value at level " + std::to_string(i));
        }
    }
}

void ForcingAndConstants::validate() const {
    if (!(g > 0.0) || !(rho0 > 0.0) || !(rho_a > 0.0) || !(c_d > 0.0)) {
        throw PreconditionError("g, rho0, rho_a and c_d must be positive");
    }
}

}  // namespace mixedcol
