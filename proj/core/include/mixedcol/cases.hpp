#pragma once

#include "mixedcol/column.hpp"
#include "mixedcol/ingest.hpp"
#include "mixedcol/solver.hpp"

namespace mixedcol {

/// Everything needed to reproduce and post-process one experiment.
struct CaseRun {
    CaseConfig config;
    ColumnGrid grid;
    ForcingAndConstants forcing;
    StateProfiles init;
    RunResult result;
};

/// Builds the grid, initial state and forcing for `config` (bottom Dirichlet
/// values taken from the initial state) and integrates for config.hours.
/// ModelInvalidError and other library errors propagate.
CaseRun run_case(const CaseConfig& config);

}  // namespace mixedcol
