#include "mixedcol/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "mixedcol/errors.hpp"
#include "mixedcol/output.hpp"

namespace mixedcol {

namespace {

void require_length(std::span<const double> values, const ColumnGrid& grid, std::size_t min_levels) {
    if (values.size() != grid.n_levels) throw DimensionError("profile length does not match grid");
    if (grid.n_levels < min_levels) {
        throw PreconditionError("profile needs at least " + std::to_string(min_levels) + " levels");
    }
}

}  // namespace

double mixed_layer_depth(std::span<const double> rho, const ColumnGrid& grid, double delta) {
    if (!(delta > 0.0)) throw PreconditionError("mixed layer criterion needs delta > 0");
    require_length(rho, grid, 1);
    const std::size_t top = grid.surface();
    const double threshold = rho[top] + delta;
    for (std::size_t k = top; k-- > 0;) {
        if (rho[k] > threshold) {
            const double frac = (threshold - rho[k + 1]) / (rho[k] - rho[k + 1]);
            return -(grid.z(k + 1) - frac * grid.dz);
        }
    }
    return grid.depth();
}

SurfaceCurrent surface_current(const StateProfiles& state) {
    if (state.size() == 0 || state.v.size() != state.size()) {
        throw DimensionError("surface current needs non-empty u and v of equal length");
    }
    const double u = state.u.back();
    const double v = state.v.back();
    return {u, v, std::hypot(u, v)};
}

Pycnocline pycnocline_sharpness(std::span<const double> rho, const ColumnGrid& grid) {
    require_length(rho, grid, 2);
    Pycnocline best{-1.0, 0.0};
    for (std::size_t k = grid.surface(); k >= 1; --k) {
        const double grad = std::abs(rho[k] - rho[k - 1]) / grid.dz;
        // Scanning downward, a deeper level must win by more than round-off.
        if (grad > best.max_gradient * (1.0 + 1e-9)) {
            best.max_gradient = grad;
            best.depth = -grid.z(k);
        }
    }
    return best;
}

std::vector<DepthInterval> static_instability_zones(std::span<const double> rho,
                                                    const ColumnGrid& grid) {
    require_length(rho, grid, 1);
    std::vector<DepthInterval> zones;
    bool open = false;
    for (std::size_t k = grid.surface(); k >= 1; --k) {
        const bool unstable = (rho[k] - rho[k - 1]) / grid.dz > kInstabilityTolerance;
        if (unstable && !open) {
            zones.push_back({grid.z(k - 1), grid.z(k)});
            open = true;
        } else if (unstable) {
            zones.back().bottom = grid.z(k - 1);
        } else {
            open = false;
        }
    }
    return zones;
}

double linearity_deviation(std::span<const double> values, const ColumnGrid& grid) {
    require_length(values, grid, 3);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double range = *hi - *lo;
    if (range == 0.0) return 0.0;

    const double n = static_cast<double>(values.size());
    double mean_z = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        mean_z += grid.z(i);
        mean_y += values[i];
    }
    mean_z /= n;
    mean_y /= n;
    double szz = 0.0;
    double szy = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double dz = grid.z(i) - mean_z;
        szz += dz * dz;
        szy += dz * (values[i] - mean_y);
    }
    const double slope = szy / szz;
    double worst = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double fit = mean_y + slope * (grid.z(i) - mean_z);
        worst = std::max(worst, std::abs(values[i] - fit));
    }
    return worst / range;
}

DiagnosticsReport diagnose(const StateProfiles& state, const ColumnGrid& grid) {
    grid.validate();
    state.validate(grid.n_levels);
    DiagnosticsReport r;
    r.mld_m = mixed_layer_depth(state.rho, grid);
    const auto surface = surface_current(state);
    r.surface_u = surface.u;
    r.surface_v = surface.v;
    r.surface_speed = surface.speed;
    const auto pycno = pycnocline_sharpness(state.rho, grid);
    r.pycno_max_grad = pycno.max_gradient;
    r.pycno_depth_m = pycno.depth;
    r.instability_zones = static_instability_zones(state.rho, grid);
    if (grid.n_levels >= 3) {
        r.linearity_dev_u = linearity_deviation(state.u, grid);
        r.linearity_dev_v = linearity_deviation(state.v, grid);
        r.linearity_dev_rho = linearity_deviation(state.rho, grid);
    }
    return r;
}

void write_csv(std::ostream& out, const DiagnosticsReport& report) {
    auto row = [&](const std::string& name, double value) {
        out << name << ',' << format_double(value) << '\n';
    };
    out << "metric,value\n";
    row("mld_m", report.mld_m);
    row("surface_u", report.surface_u);
    row("surface_v", report.surface_v);
    row("surface_speed", report.surface_speed);
    row("pycno_max_grad", report.pycno_max_grad);
    row("pycno_depth_m", report.pycno_depth_m);
    row("instability_zone_count", static_cast<double>(report.instability_zones.size()));
    for (std::size_t i = 0; i < report.instability_zones.size(); ++i) {
        const auto tag = "instability_zone_" + std::to_string(i + 1);
        row(tag + "_bottom", report.instability_zones[i].bottom);
        row(tag + "_top", report.instability_zones[i].top);
    }
    row("linearity_dev_u", report.linearity_dev_u);
    row("linearity_dev_v", report.linearity_dev_v);
    row("linearity_dev_rho", report.linearity_dev_rho);
}

void print_report(std::ostream& out, const DiagnosticsReport& report) {
    out << "mixed layer depth      " << report.mld_m << " m\n"
        << "surface current        u=" << report.surface_u << " v=" << report.surface_v
        << " |U|=" << report.surface_speed << " m/s\n"
        << "pycnocline max |drho/dz| " << report.pycno_max_grad << " kg/m^4 at "
        << report.pycno_depth_m << " m\n"
        << "static instability     ";
    if (report.instability_zones.empty()) out << "none";
    for (const auto& zone : report.instability_zones) {
        out << '[' << zone.bottom << ", " << zone.top << "] m ";
    }
    out << "\nlinearity deviation    u=" << report.linearity_dev_u
        << " v=" << report.linearity_dev_v << " rho=" << report.linearity_dev_rho << '\n';
}

}  // namespace mixedcol
