#include "mixedcol/closures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <string>

#include "mixedcol/errors.hpp"
#include "mixedcol/output.hpp"

namespace mixedcol {

std::string_view to_string(ClosureFamily family) noexcept {
    switch (family) {
        case ClosureFamily::R213: return "r213";
        case ClosureFamily::R23: return "r23";
        case ClosureFamily::R224: return "r224";
    }
    return "unknown";
}

std::optional<ClosureFamily> parse_family(std::string_view name) noexcept {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "r213") return ClosureFamily::R213;
    if (lower == "r23") return ClosureFamily::R23;
    if (lower == "r224") return ClosureFamily::R224;
    return std::nullopt;
}

ClosureSpec ClosureSpec::defaults(ClosureFamily family) {
    switch (family) {
        case ClosureFamily::R213:
            return {ClosureFamily::R213, 1e-4, 1e-2, 1e-5, 0.0, 5.0};
        case ClosureFamily::R23:
            return {ClosureFamily::R23, 1e-4, 1e-1, 1e-5, 1e-1, 10.0};
        case ClosureFamily::R224:
            return {ClosureFamily::R224, 1e-4, 1e-2, 1e-5, 1e-3, 5.0};
    }
    throw PreconditionError("unknown closure family");
}

ClosureSpec ClosureSpec::opa() {
    return {ClosureFamily::R213, 1e-6, 1e-2, 1e-7, 0.0, 5.0};
}

void ClosureSpec::validate() const {
    if (!(alpha1 > 0.0) || !(beta1 > 0.0) || !(alpha2 > 0.0)) {
        throw PreconditionError("closure needs alpha1, beta1, alpha2 > 0");
    }
    if (family == ClosureFamily::R23 && !(beta2 > 0.0)) {
        throw PreconditionError("R23 closure needs beta2 > 0");
    }
    if (gamma != 5.0 && gamma != 10.0) {
        throw PreconditionError("closure gamma must be 5 or 10");
    }
}

RichardsonProfile richardson_number(const StateProfiles& state, const ColumnGrid& grid,
                                    const ForcingAndConstants& constants,
                                    double shear_floor) {
    grid.validate();
    if (state.u.size() != grid.n_levels || state.v.size() != grid.n_levels ||
        state.rho.size() != grid.n_levels) {
        throw DimensionError("state length does not match grid");
    }
    if (!(shear_floor > 0.0)) throw PreconditionError("shear_floor must be positive");

    const double buoyancy_scale = constants.g / constants.rho0;
    const double inv_dz = 1.0 / grid.dz;
    RichardsonProfile out{std::vector<double>(grid.n_levels), shear_floor};
    for (std::size_t i = 1; i < grid.n_levels; ++i) {
        const double du = (state.u[i] - state.u[i - 1]) * inv_dz;
        const double dv = (state.v[i] - state.v[i - 1]) * inv_dz;
        const double drho = (state.rho[i] - state.rho[i - 1]) * inv_dz;
        const double shear2 = std::max(du * du + dv * dv, shear_floor);
        out.values[i] = -buoyancy_scale * drho / shear2;
    }
    out.values[0] = out.values[1];
    return out;
}

namespace {

double denominator(const ClosureSpec& spec, double richardson) {
    const double d = 1.0 + spec.gamma * richardson;
    if (d == 0.0) throw SingularityError(richardson);
    return d;
}

double f1_at(const ClosureSpec& spec, double d) {
    return spec.alpha1 + spec.beta1 / (d * d);
}

double f2_at(const ClosureSpec& spec, double d) {
    switch (spec.family) {
        case ClosureFamily::R213: return spec.alpha2 + f1_at(spec, d) / d;
        case ClosureFamily::R23: return spec.alpha2 + spec.beta2 / (d * d * d);
        case ClosureFamily::R224: return spec.alpha2 + f1_at(spec, d) / (d * d);
    }
    return 0.0;
}

}  // namespace

double eval_f1(const ClosureSpec& spec, double richardson) {
    return f1_at(spec, denominator(spec, richardson));
}

double eval_f2(const ClosureSpec& spec, double richardson) {
    return f2_at(spec, denominator(spec, richardson));
}

EddyCoefficients coefficients_profile(const ClosureSpec& spec,
                                      const RichardsonProfile& richardson) {
    const std::size_t n = richardson.values.size();
    EddyCoefficients out;
    out.nu1.resize(n);
    out.nu2.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = 1.0 + spec.gamma * richardson.values[i];
        if (std::abs(d) < kSingularBand) {
            out.nu1[i] = kSingularCap;
            out.nu2[i] = kSingularCap;
            out.singular_levels.push_back(i);
            continue;
        }
        out.nu1[i] = f1_at(spec, d);
        out.nu2[i] = f2_at(spec, d);
        if (out.nu2[i] < 0.0) out.negative_nu2_levels.push_back(i);
    }
    return out;
}

CoefficientTable coefficient_table(const ClosureSpec& spec, double r_min, double r_max,
                                   std::size_t n_samples) {
    if (!(r_min < r_max)) throw PreconditionError("coefficient table needs r_min < r_max");
    if (n_samples < 2) throw PreconditionError("coefficient table needs at least 2 samples");

    CoefficientTable table;
    table.rows.reserve(n_samples);
    const double span = r_max - r_min;
    const double last = static_cast<double>(n_samples - 1);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double r = i + 1 == n_samples ? r_max : r_min + span * (static_cast<double>(i) / last);
        const double d = 1.0 + spec.gamma * r;
        if (std::abs(d) < kSingularBand) {
            table.skipped.push_back(r);
            continue;
        }
        table.rows.push_back({r, f1_at(spec, d), f2_at(spec, d)});
    }
    return table;
}

void write_csv(std::ostream& out, const CoefficientTable& table) {
    out << "R,f1,f2\n";
    for (const auto& row : table.rows) {
        out << format_double(row.richardson) << ',' << format_double(row.f1) << ','
            << format_double(row.f2) << '\n';
    }
}

}  // namespace mixedcol
