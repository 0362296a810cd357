#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mixedcol/cases.hpp"
#include "mixedcol/closures.hpp"
#include "mixedcol/diagnostics.hpp"
#include "mixedcol/equilibrium.hpp"
#include "mixedcol/errors.hpp"
#include "mixedcol/ingest.hpp"
#include "mixedcol/output.hpp"

namespace mixedcol::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kDefaultOutDir = "mixedcol_out";

/// Flags shared by the case-driven subcommands. Values stay as text and go
/// through the same parser as config files.
struct CaseFlags {
    std::string config;
    std::string out;
    std::vector<std::pair<std::string, std::string>> values;

    void add(CLI::App& app, bool with_model) {
        app.add_option("--config", config, "key = value settings file");
        app.add_option("--out", out, "Output directory (default: $MIXEDCOL_OUT or ./mixedcol_out)");
        static constexpr std::array<std::pair<const char*, const char*>, 12> keys{{
            {"case", "Reference experiment 1, 2 or 3"},
            {"init", "Initial profile CSV (z,u,v,rho)"},
            {"dz", "Grid spacing (m)"},
            {"dt", "Time step (s)"},
            {"hours", "Integration length (h)"},
            {"wind-u", "Zonal air velocity (m/s)"},
            {"wind-v", "Meridional air velocity (m/s)"},
            {"q-flux", "Surface density flux (kg m^-2 s^-1)"},
            {"rho-a", "Air density (kg/m^3)"},
            {"g", "Gravity (m/s^2)"},
            {"cd", "Drag coefficient"},
            {"tol", "Residual stop tolerance"},
        }};
        values.reserve(keys.size() + 1);
        for (const auto& [key, help] : keys) {
            values.emplace_back(key, std::string{});
            app.add_option(std::string("--") + key, values.back().second, help);
        }
        if (with_model) {
            values.emplace_back("model", std::string{});
            app.add_option("--model", values.back().second, "Closure: r213, r23 or r224");
        }
    }

    /// Defaults, then `preset`, then the config file, then flags.
    CaseConfig resolve(std::vector<ConfigEntry> preset = {}) const {
        auto entries = std::move(preset);
        if (!config.empty()) {
            auto file = read_config_file(config);
            entries.insert(entries.end(), file.begin(), file.end());
        }
        for (const auto& [key, value] : values) {
            if (!value.empty()) entries.emplace_back(key, value);
        }
        return make_config(entries);
    }

    fs::path out_dir() const {
        if (!out.empty()) return out;
        if (const char* env = std::getenv("MIXEDCOL_OUT"); env != nullptr && *env != '\0') return env;
        return kDefaultOutDir;
    }
};

void write_file(const fs::path& path, const auto& writer) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open " + path.string() + " for writing");
    writer(file);
    if (!file) throw Error("failed writing " + path.string());
}

std::string family_name(ClosureFamily family) { return std::string(to_string(family)); }

void write_case_outputs(const fs::path& dir, const CaseRun& run, const DiagnosticsReport& report) {
    write_run(dir, run.result, run.grid, run.config.dt);
    write_file(dir / "diagnostics.csv", [&](std::ostream& os) { write_csv(os, report); });
}

int cmd_run(const CaseFlags& flags, std::ostream& out, std::ostream& err) {
    const auto config = flags.resolve();
    const auto run = run_case(config);
    for (const auto& line : run.result.log) err << "note: " << line << '\n';

    const auto report = diagnose(run.result.final_state, run.grid);
    const auto dir = flags.out_dir();
    write_case_outputs(dir, run, report);

    out << "case " << config.case_id << ", model " << family_name(config.family) << ", "
        << run.grid.n_levels << " levels, dt " << config.dt << " s\n";
    if (run.result.converged) {
        out << "converged after " << run.result.steps_taken << " steps\n";
    } else {
        out << "completed " << run.result.steps_taken << " steps without reaching tolerance "
            << config.tolerance << '\n';
    }
    if (!run.result.residuals.empty()) out << "final residual " << run.result.residuals.back() << '\n';
    print_report(out, report);
    out << "outputs written to " << dir.string() << '\n';
    return kExitOk;
}

struct CoeffsFlags {
    double r_min = -0.5;
    double r_max = 2.0;
    std::size_t samples = 251;
    std::string out;
};

int cmd_coeffs(const CoeffsFlags& flags, const CaseFlags& dirs, std::ostream& out) {
    const auto dir = flags.out.empty() ? dirs.out_dir() : fs::path(flags.out);
    fs::create_directories(dir);
    for (auto family : {ClosureFamily::R213, ClosureFamily::R23, ClosureFamily::R224}) {
        const auto table = coefficient_table(ClosureSpec::defaults(family), flags.r_min,
                                             flags.r_max, flags.samples);
        const auto path = dir / ("coeffs_" + family_name(family) + ".csv");
        write_file(path, [&](std::ostream& os) { write_csv(os, table); });
        out << family_name(family) << ": " << table.rows.size() << " samples";
        if (!table.skipped.empty()) out << ", " << table.skipped.size() << " on the pole skipped";
        out << " -> " << path.string() << '\n';
    }
    return kExitOk;
}

struct KhFlags {
    double r_max = 0.5;
    std::size_t samples = 501;
};

int cmd_equilibrium(const CaseFlags& flags, const KhFlags& kh, std::ostream& out) {
    const auto config = flags.resolve({{"case", "3"}});
    const auto grid = config.grid();
    auto forcing = config.forcing();
    bottom_values_from(initial_state(config), forcing);
    const auto spec = ClosureSpec::defaults(config.family);

    const auto sol = solve_equilibrium(spec, forcing, grid);
    const auto curves = kh_curves(spec, sol.C, 0.0, kh.r_max, kh.samples);

    const auto dir = flags.out_dir();
    fs::create_directories(dir);
    write_file(dir / "kh_curves.csv", [&](std::ostream& os) { write_csv(os, curves); });
    write_file(dir / "equilibrium_profiles.csv",
               [&](std::ostream& os) { write_state_csv(os, sol.profiles, grid); });

    out << "model " << family_name(config.family) << ", C = " << sol.C << '\n'
        << "equilibrium Richardson number " << sol.r_e;
    if (sol.crossings > 1) out << " (smallest of " << sol.crossings << " crossings)";
    out << "\nslopes du/dz " << sol.u_slope << " dv/dz " << sol.v_slope << " drho/dz "
        << sol.rho_slope << '\n'
        << "air density sensitivity:\n";
    const std::array<double, 4> rho_a{1.0, 1.1, 1.2, 1.3};
    const auto sweep = rho_a_sensitivity(spec, forcing, rho_a);
    for (std::size_t i = 0; i < rho_a.size(); ++i) {
        out << "  rho_a " << rho_a[i] << "  Re " << sweep[i] << '\n';
    }
    out << "outputs written to " << dir.string() << '\n';
    return kExitOk;
}

int cmd_diagnose(const CaseFlags& flags, std::ostream& out) {
    const auto config = flags.resolve();
    const auto grid = config.grid();
    const auto state = initial_state(config);
    const auto report = diagnose(state, grid);

    const auto dir = flags.out_dir();
    fs::create_directories(dir);
    write_file(dir / "diagnostics.csv", [&](std::ostream& os) { write_csv(os, report); });

    if (config.init_path) {
        out << "profile " << config.init_path->string();
    } else {
        out << "case " << config.case_id << " initial profile";
    }
    out << " on " << grid.n_levels << " levels\n";
    print_report(out, report);
    return kExitOk;
}

struct CompareRow {
    ClosureFamily family;
    std::optional<DiagnosticsReport> report;
    bool converged = false;
    std::string reason;
};

int cmd_compare(const CaseFlags& flags, const std::vector<std::string>& model_names,
                std::ostream& out) {
    std::vector<ClosureFamily> families;
    if (model_names.empty()) {
        families = {ClosureFamily::R213, ClosureFamily::R23, ClosureFamily::R224};
    }
    for (const auto& name : model_names) {
        const auto family = parse_family(name);
        if (!family) throw ValidationError("unknown model '" + name + "' (expected r213, r23 or r224)");
        if (std::find(families.begin(), families.end(), *family) != families.end()) {
            throw ValidationError("model '" + name + "' requested twice");
        }
        families.push_back(*family);
    }
    if (families.size() < 2) throw PreconditionError("compare needs at least two models");

    const auto base = flags.resolve();
    const auto dir = flags.out_dir();
    fs::create_directories(dir);

    std::vector<std::future<CompareRow>> jobs;
    jobs.reserve(families.size());
    for (auto family : families) {
        jobs.push_back(std::async(std::launch::async, [&base, &dir, family] {
            CompareRow row{family, std::nullopt, false, {}};
            auto config = base;
            config.family = family;
            try {
                const auto run = run_case(config);
                row.report = diagnose(run.result.final_state, run.grid);
                row.converged = run.result.converged;
                write_case_outputs(dir / family_name(family), run, *row.report);
            } catch (const ModelInvalidError& e) {
                row.reason = e.what();
            }
            return row;
        }));
    }
    std::vector<CompareRow> rows;
    rows.reserve(jobs.size());
    for (auto& job : jobs) rows.push_back(job.get());

    write_file(dir / "compare.csv", [&](std::ostream& os) {
        os << "model,status,mld_m,surface_speed,pycno_max_grad,converged,reason\n";
        for (const auto& row : rows) {
            os << family_name(row.family) << ',';
            if (row.report) {
                os << "ok," << format_double(row.report->mld_m) << ','
                   << format_double(row.report->surface_speed) << ','
                   << format_double(row.report->pycno_max_grad) << ','
                   << (row.converged ? "true" : "false") << ",\n";
            } else {
                os << "rejected,,,,,\"" << row.reason << "\"\n";
            }
        }
    });

    bool rejected = false;
    out << "case " << base.case_id << '\n';
    for (const auto& row : rows) {
        out << "  " << family_name(row.family) << ": ";
        if (row.report) {
            out << "MLD " << row.report->mld_m << " m, surface speed " << row.report->surface_speed
                << " m/s, max |drho/dz| " << row.report->pycno_max_grad << " kg/m^4, "
                << (row.converged ? "converged" : "not converged") << '\n';
        } else {
            rejected = true;
            out << "rejected: " << row.reason << '\n';
        }
    }
    out << "outputs written to " << dir.string() << '\n';
    return rejected ? kExitModelInvalid : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"One-dimensional ocean mixed-layer column simulator", "mixedcol"};
    app.require_subcommand(1);

    CaseFlags run_flags;
    auto* run_cmd = app.add_subcommand("run", "Integrate one case with one closure");
    run_flags.add(*run_cmd, true);

    CaseFlags coeffs_dirs;
    CoeffsFlags coeffs_flags;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "Tabulate f1 and f2 for every closure");
    coeffs_cmd->add_option("--r-min", coeffs_flags.r_min, "Smallest Richardson number")->capture_default_str();
    coeffs_cmd->add_option("--r-max", coeffs_flags.r_max, "Largest Richardson number")->capture_default_str();
    coeffs_cmd->add_option("--samples", coeffs_flags.samples, "Number of samples")->capture_default_str();
    coeffs_cmd->add_option("--out", coeffs_flags.out, "Output directory");

    CaseFlags eq_flags;
    KhFlags kh_flags;
    auto* eq_cmd = app.add_subcommand("equilibrium", "Equilibrium Richardson number and linear steady state");
    eq_flags.add(*eq_cmd, true);
    eq_cmd->add_option("--r-max", kh_flags.r_max, "Upper end of the k/h curves")->capture_default_str();
    eq_cmd->add_option("--samples", kh_flags.samples, "Samples of the k/h curves")->capture_default_str();

    CaseFlags diag_flags;
    auto* diag_cmd = app.add_subcommand("diagnose", "Diagnostics of an initial or ingested profile");
    diag_flags.add(*diag_cmd, false);

    CaseFlags cmp_flags;
    std::vector<std::string> cmp_models;
    auto* cmp_cmd = app.add_subcommand("compare", "Run one case with several closures");
    cmp_flags.add(*cmp_cmd, false);
    cmp_cmd->add_option("--model", cmp_models, "Closures to compare (repeat or comma-separate)")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitError;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_flags, out, err);
        if (coeffs_cmd->parsed()) return cmd_coeffs(coeffs_flags, coeffs_dirs, out);
        if (eq_cmd->parsed()) return cmd_equilibrium(eq_flags, kh_flags, out);
        if (diag_cmd->parsed()) return cmd_diagnose(diag_flags, out);
        if (cmp_cmd->parsed()) return cmd_compare(cmp_flags, cmp_models, out);
    } catch (const ModelInvalidError& e) {
        err << "error: " << e.what() << '\n';
        return kExitModelInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace mixedcol::cli
