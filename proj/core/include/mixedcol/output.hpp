#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "mixedcol/column.hpp"
#include "mixedcol/solver.hpp"

namespace mixedcol {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

/// `z,u,v,rho`, bottom row first, surface row last.
void write_state_csv(std::ostream& out, const StateProfiles& state, const ColumnGrid& grid);
/// `step,time_s,r`, steps numbered from 1.
void write_residuals_csv(std::ostream& out, const RunResult& result, double dt);
/// `z,nu1,nu2`.
void write_nu_csv(std::ostream& out, const EddyCoefficients& nu, const ColumnGrid& grid);

/// Writes state.csv, residuals.csv and nu.csv into `directory` (created if needed).
void write_run(const std::filesystem::path& directory, const RunResult& result,
               const ColumnGrid& grid, double dt);

}  // namespace mixedcol
