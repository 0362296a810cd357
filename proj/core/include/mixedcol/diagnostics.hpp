#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "mixedcol/column.hpp"

namespace mixedcol {

inline constexpr double kMixedLayerDelta = 0.01;        // kg/m^3
inline constexpr double kInstabilityTolerance = 1e-12;  // kg/m^4

/// Depth (m, positive down) where density first exceeds the surface value by
/// `delta`, scanning down from the surface and interpolating linearly inside
/// the bracketing cell. Returns the column depth when never exceeded.
double mixed_layer_depth(std::span<const double> rho, const ColumnGrid& grid,
                         double delta = kMixedLayerDelta);

struct SurfaceCurrent {
    double u = 0.0;
    double v = 0.0;
    double speed = 0.0;
};

SurfaceCurrent surface_current(const StateProfiles& state);

struct Pycnocline {
    double max_gradient = 0.0;  // max |rho_z|, kg/m^4
    double depth = 0.0;         // m, positive down; shallowest on ties
};

/// Largest backward-difference density gradient. Needs at least two levels.
Pycnocline pycnocline_sharpness(std::span<const double> rho, const ColumnGrid& grid);

/// z interval (m, negative down) with bottom < top.
struct DepthInterval {
    double bottom = 0.0;
    double top = 0.0;
};

/// Maximal runs of grid cells where density decreases downward by more than
/// kInstabilityTolerance per metre. Ordered from the surface down.
std::vector<DepthInterval> static_instability_zones(std::span<const double> rho,
                                                    const ColumnGrid& grid);

/// Least-squares line through (z, value); max |residual| over the profile
/// range, or 0 for a constant profile. Needs at least three levels.
double linearity_deviation(std::span<const double> values, const ColumnGrid& grid);

struct DiagnosticsReport {
    double mld_m = 0.0;
    double surface_u = 0.0;
    double surface_v = 0.0;
    double surface_speed = 0.0;
    double pycno_max_grad = 0.0;
    double pycno_depth_m = 0.0;
    std::vector<DepthInterval> instability_zones;
    double linearity_dev_u = 0.0;
    double linearity_dev_v = 0.0;
    double linearity_dev_rho = 0.0;
};

DiagnosticsReport diagnose(const StateProfiles& state, const ColumnGrid& grid);

/// `metric,value` rows; one `instability_zone_<n>_bottom/top` pair per zone.
void write_csv(std::ostream& out, const DiagnosticsReport& report);
/// Human-readable multi-line summary.
void print_report(std::ostream& out, const DiagnosticsReport& report);

}  // namespace mixedcol
