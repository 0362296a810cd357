#include "mixedcol/ingest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "mixedcol/errors.hpp"

namespace mixedcol {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<double> to_double(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

}  // namespace

ProfileSamples parse_profile(std::istream& in) {
    struct Row {
        double z, u, v, rho;
    };
    std::vector<Row> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty()) continue;
        const auto fields = split_commas(text);
        if (!header_seen) {
            static constexpr std::array<std::string_view, 4> expected{"z", "u", "v", "rho"};
            if (fields.size() != expected.size() ||
                !std::equal(fields.begin(), fields.end(), expected.begin())) {
                throw ParseError(line_no, "expected header z,u,v,rho");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != 4) {
            throw ParseError(line_no, "expected 4 fields, found " + std::to_string(fields.size()));
        }
        std::array<double, 4> values{};
        for (std::size_t i = 0; i < 4; ++i) {
            const auto parsed = to_double(fields[i]);
            if (!parsed) throw ParseError(line_no, "not a finite number: '" + std::string(fields[i]) + "'");
            values[i] = *parsed;
        }
        rows.push_back({values[0], values[1], values[2], values[3]});
    }
    if (!header_seen) throw ParseError(line_no, "missing header z,u,v,rho");
    if (rows.empty()) throw ValidationError("profile has no data rows");

    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.z < b.z; });
    ProfileSamples out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0 && rows[i].z == rows[i - 1].z) {
            throw ValidationError("duplicate depth " + std::to_string(rows[i].z) + " m in profile");
        }
        out.depths.push_back(rows[i].z);
        out.u.push_back(rows[i].u);
        out.v.push_back(rows[i].v);
        out.rho.push_back(rows[i].rho);
    }
    return out;
}

ProfileSamples read_profile_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open profile file " + path.string());
    return parse_profile(in);
}

StateProfiles interpolate_to_grid(const ProfileSamples& samples, const ColumnGrid& grid) {
    const std::size_t m = samples.size();
    if (m == 0) throw PreconditionError("cannot interpolate an empty profile");
    if (samples.u.size() != m || samples.v.size() != m || samples.rho.size() != m) {
        throw DimensionError("profile columns have different lengths");
    }

    StateProfiles out;
    out.u.resize(grid.n_levels);
    out.v.resize(grid.n_levels);
    out.rho.resize(grid.n_levels);
    const auto& d = samples.depths;
    for (std::size_t i = 0; i < grid.n_levels; ++i) {
        const double z = grid.z(i);
        if (z <= d.front() || m == 1) {
            out.u[i] = samples.u.front();
            out.v[i] = samples.v.front();
            out.rho[i] = samples.rho.front();
            continue;
        }
        if (z >= d.back()) {
            out.u[i] = samples.u.back();
            out.v[i] = samples.v.back();
            out.rho[i] = samples.rho.back();
            continue;
        }
        const auto hi = static_cast<std::size_t>(std::upper_bound(d.begin(), d.end(), z) - d.begin());
        const std::size_t lo = hi - 1;
        const double t = (z - d[lo]) / (d[hi] - d[lo]);
        auto lerp = [&](const std::vector<double>& f) { return f[lo] + t * (f[hi] - f[lo]); };
        out.u[i] = lerp(samples.u);
        out.v[i] = lerp(samples.v);
        out.rho[i] = lerp(samples.rho);
    }
    return out;
}

namespace {

double bump(double z, double centre, double width) {
    const double x = (z - centre) / width;
    return std::exp(-x * x);
}

/// 0 above `centre`, 1 below, smooth over `width`.
double step_down(double z, double centre, double width) {
    return 0.5 * (1.0 - std::tanh((z - centre) / width));
}

// Westward surface jet over an eastward undercurrent peaking near -55 m.
// Below the core the flow relaxes linearly, so the deep band carries almost
// no curvature. Density is stratified up to the surface.
void case1(double z, double& u, double& v, double& rho) {
    u = -0.3 * bump(z, 0.0, 12.0) + 0.3 * step_down(z, -34.0, 7.0) + 1.5e-4 * (z + 55.0);
    v = 0.1 * bump(z, 0.0, 15.0) - 0.05;
    rho = 1022.0 + 3.0 * step_down(z, -50.0, 25.0);
}

// Weakly stratified 70 m layer over a sharp pycnocline, with lighter water
// lodged under [-50, -30] m. The undercurrent (max at -55 m) and a southward
// jet near -20 m set the shear that places R near -0.2 at -45 m and below
// -0.2 at -35 m and -50 m on a 5 m grid.
void case2(double z, double& u, double& v, double& rho) {
    u = 0.1 * bump(z, -55.0, 12.0) + 0.05;
    v = -0.2 * bump(z, -20.0, 12.0);
    rho = 1022.0 + 2.0 * step_down(z, -82.0, 4.0) - 0.025 * step_down(z, -42.0, 7.0) - 1e-4 * z;
}

// 35 m mixed layer resting on a weak density step; eastward cores at the
// surface and -70 m, westward at -45 m and -90 m, over a gentle background
// shear; southward core at -55 m between northward flow at the surface and
// -90 m. The step is just large enough for the 0.01 criterion, which keeps the
// column less stratified than its wind-driven steady state.
void case3(double z, double& u, double& v, double& rho) {
    u = 0.002 * (z + 100.0) + 0.3 * bump(z, 0.0, 10.0) - 0.2 * bump(z, -45.0, 8.0) +
        0.15 * bump(z, -70.0, 8.0) - 0.1 * bump(z, -90.0, 6.0);
    v = 0.1 * bump(z, 0.0, 10.0) - 0.15 * bump(z, -55.0, 8.0) + 0.08 * bump(z, -90.0, 6.0);
    rho = 1024.0 + 0.011 * step_down(z, -30.4, 4.0);
}

}  // namespace

StateProfiles gen_case_init(int case_id, const ColumnGrid& grid) {
    void (*shape)(double, double&, double&, double&) = nullptr;
    switch (case_id) {
        case 1: shape = case1; break;
        case 2: shape = case2; break;
        case 3: shape = case3; break;
        default: throw PreconditionError("case id must be 1, 2 or 3, got " + std::to_string(case_id));
    }
    grid.validate();
    StateProfiles out;
    out.u.resize(grid.n_levels);
    out.v.resize(grid.n_levels);
    out.rho.resize(grid.n_levels);
    for (std::size_t i = 0; i < grid.n_levels; ++i) {
        shape(grid.z(i), out.u[i], out.v[i], out.rho[i]);
    }
    return out;
}

CaseConfig CaseConfig::defaults(int case_id) {
    CaseConfig c;
    c.case_id = case_id;
    switch (case_id) {
        case 1:
            c.dz = 1.0;
            c.hours = 48.0;
            c.wind_u = 8.1;
            c.wind_v = 2.1;
            break;
        case 2:
            c.dz = 5.0;
            c.hours = 48.0;
            c.wind_u = 11.7;
            c.wind_v = 0.4;
            break;
        case 3:
            c.dz = 5.0;
            c.hours = 10000.0;
            c.wind_u = 5.4;
            c.wind_v = 0.9;
            break;
        default:
            throw PreconditionError("case id must be 1, 2 or 3, got " + std::to_string(case_id));
    }
    return c;
}

std::size_t CaseConfig::max_steps() const {
    return static_cast<std::size_t>(std::llround(hours * 3600.0 / dt));
}

ForcingAndConstants CaseConfig::forcing() const {
    ForcingAndConstants f;
    f.wind_u_air = wind_u;
    f.wind_v_air = wind_v;
    f.q_flux = q_flux;
    f.g = g;
    f.rho0 = rho0;
    f.rho_a = rho_a;
    f.c_d = c_d;
    return f;
}

void CaseConfig::validate() const {
    if (!(dz > 0.0) || !(dt > 0.0) || !(hours > 0.0) || !(depth > 0.0)) {
        throw ValidationError("dz, dt, hours and depth must be positive");
    }
    if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
    forcing().validate();
    (void)grid();
}

void bottom_values_from(const StateProfiles& init, ForcingAndConstants& forcing) {
    if (init.size() == 0) throw DimensionError("empty initial state");
    forcing.u_b = init.u.front();
    forcing.v_b = init.v.front();
    forcing.rho_b = init.rho.front();
}

std::vector<ConfigEntry> read_config_entries(std::istream& in) {
    std::vector<ConfigEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view text = line;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected key = value");
        const auto key = trim(text.substr(0, eq));
        const auto value = trim(text.substr(eq + 1));
        if (key.empty()) throw ParseError(line_no, "empty key");
        entries.emplace_back(std::string(key), std::string(value));
    }
    return entries;
}

std::vector<ConfigEntry> read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file " + path.string());
    return read_config_entries(in);
}

namespace {

std::string normalize_key(std::string key) {
    std::replace(key.begin(), key.end(), '_', '-');
    return key;
}

double number_for(const std::string& key, const std::string& value) {
    const auto parsed = to_double(value);
    if (!parsed) throw ValidationError("setting '" + key + "' needs a number, got '" + value + "'");
    return *parsed;
}

int case_for(const std::string& value) {
    const auto parsed = to_double(value);
    if (!parsed || (*parsed != 1.0 && *parsed != 2.0 && *parsed != 3.0)) {
        throw ValidationError("case must be 1, 2 or 3, got '" + value + "'");
    }
    return static_cast<int>(*parsed);
}

}  // namespace

void apply_setting(CaseConfig& config, const std::string& raw_key, const std::string& value) {
    const auto key = normalize_key(raw_key);
    if (key == "case") {
        config.case_id = case_for(value);
    } else if (key == "model") {
        const auto family = parse_family(value);
        if (!family) throw ValidationError("unknown model '" + value + "' (expected r213, r23 or r224)");
        config.family = *family;
    } else if (key == "init") {
        config.init_path = value;
    } else if (key == "dz") {
        config.dz = number_for(key, value);
    } else if (key == "dt") {
        config.dt = number_for(key, value);
    } else if (key == "hours") {
        config.hours = number_for(key, value);
    } else if (key == "depth") {
        config.depth = number_for(key, value);
    } else if (key == "wind-u") {
        config.wind_u = number_for(key, value);
    } else if (key == "wind-v") {
        config.wind_v = number_for(key, value);
    } else if (key == "q-flux") {
        config.q_flux = number_for(key, value);
    } else if (key == "rho-a") {
        config.rho_a = number_for(key, value);
    } else if (key == "g") {
        config.g = number_for(key, value);
    } else if (key == "cd") {
        config.c_d = number_for(key, value);
    } else if (key == "rho0") {
        config.rho0 = number_for(key, value);
    } else if (key == "tol") {
        config.tolerance = number_for(key, value);
    } else {
        throw ValidationError("unknown setting '" + raw_key + "'");
    }
}

CaseConfig make_config(const std::vector<ConfigEntry>& entries, std::optional<int> case_override) {
    int case_id = 1;
    if (case_override) {
        case_id = *case_override;
    } else {
        for (const auto& [key, value] : entries) {
            if (normalize_key(key) == "case") case_id = case_for(value);
        }
    }
    auto config = CaseConfig::defaults(case_id);
    for (const auto& [key, value] : entries) {
        if (normalize_key(key) == "case") continue;
        apply_setting(config, key, value);
    }
    return config;
}

StateProfiles initial_state(const CaseConfig& config) {
    const auto grid = config.grid();
    if (config.init_path) return interpolate_to_grid(read_profile_file(*config.init_path), grid);
    return gen_case_init(config.case_id, grid);
}

}  // namespace mixedcol
