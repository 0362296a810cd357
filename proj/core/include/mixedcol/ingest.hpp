#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixedcol/closures.hpp"
#include "mixedcol/column.hpp"

namespace mixedcol {

/// Observed profile: depths strictly increasing toward the surface.
struct ProfileSamples {
    std::vector<double> depths;  // m, negative down
    std::vector<double> u;
    std::vector<double> v;
    std::vector<double> rho;

    std::size_t size() const noexcept { return depths.size(); }
};

/// Parses `z,u,v,rho` CSV (header required, blank lines ignored) and returns
/// rows sorted by depth. ParseError carries the offending line; duplicate
/// depths raise ValidationError.
ProfileSamples parse_profile(std::istream& in);
ProfileSamples read_profile_file(const std::filesystem::path& path);

/// Piecewise-linear interpolation onto the grid; outside the sampled range
/// the nearest endpoint value is held.
StateProfiles interpolate_to_grid(const ProfileSamples& samples, const ColumnGrid& grid);

/// Synthetic initial conditions for the three reference experiments:
///   1: westward surface jet over an eastward undercurrent, no mixed layer;
///   2: 70 m weakly mixed layer holding a density inversion over [-50, -30] m;
///   3: 35 m mixed layer with alternating jets below.
/// Throws PreconditionError for any other case id.
StateProfiles gen_case_init(int case_id, const ColumnGrid& grid);

/// Run parameters for one experiment.
struct CaseConfig {
    int case_id = 1;
    double depth = 100.0;  // m
    double dz = 1.0;       // m
    double dt = 60.0;      // s
    double hours = 48.0;
    double wind_u = 8.1;  // m/s
    double wind_v = 2.1;  // m/s
    double q_flux = -1e-6;
    ClosureFamily family = ClosureFamily::R224;
    double g = 9.81;
    double rho0 = 1025.0;
    double rho_a = 1.3;
    double c_d = 1.2e-3;
    double tolerance = 1e-8;
    std::optional<std::filesystem::path> init_path;

    static CaseConfig defaults(int case_id);

    ColumnGrid grid() const { return ColumnGrid::from_depth(depth, dz); }
    std::size_t max_steps() const;
    /// Forcing with zero bottom values; see bottom_values_from().
    ForcingAndConstants forcing() const;
    void validate() const;
};

/// Copies the deepest level of `init` into the Dirichlet values.
void bottom_values_from(const StateProfiles& init, ForcingAndConstants& forcing);

using ConfigEntry = std::pair<std::string, std::string>;

/// Reads flat `key = value` lines; `#` starts a comment, blank lines are skipped.
std::vector<ConfigEntry> read_config_entries(std::istream& in);
std::vector<ConfigEntry> read_config_file(const std::filesystem::path& path);

/// Applies one setting. Keys mirror the CLI flags (`wind-u`, `q-flux`,
/// `hours`, `model`, ...; `_` and `-` are interchangeable). Throws
/// ValidationError for unknown keys or unparsable values.
void apply_setting(CaseConfig& config, const std::string& key, const std::string& value);

/// Defaults for the case chosen by `case_override`, else the entries' `case`
/// key, else case 1; then every other entry applied in order.
CaseConfig make_config(const std::vector<ConfigEntry>& entries,
                       std::optional<int> case_override = std::nullopt);

/// Initial state for a config: the ingested file when init_path is set,
/// otherwise the synthetic generator for case_id.
StateProfiles initial_state(const CaseConfig& config);

}  // namespace mixedcol
