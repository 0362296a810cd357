#include "mixedcol/cases.hpp"

namespace mixedcol {

CaseRun run_case(const CaseConfig& config) {
    config.validate();
    CaseRun run;
    run.config = config;
    run.grid = config.grid();
    run.init = initial_state(config);
    run.forcing = config.forcing();
    bottom_values_from(run.init, run.forcing);

    IntegrationOptions options;
    options.dt = config.dt;
    options.max_steps = config.max_steps();
    options.stop_tolerance = config.tolerance;
    run.result = integrate(run.init, ClosureSpec::defaults(config.family), run.grid, run.forcing, options);
    return run;
}

}  // namespace mixedcol
