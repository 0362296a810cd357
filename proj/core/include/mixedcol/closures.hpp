#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "mixedcol/column.hpp"

namespace mixedcol {

/// Richardson-number closure families, named after the exponents of
/// (1 + gamma R) in the viscosity and diffusivity denominators.
enum class ClosureFamily { R213, R23, R224 };

std::string_view to_string(ClosureFamily family) noexcept;
/// Accepts "r213", "R23", ... ; returns nullopt for anything else.
std::optional<ClosureFamily> parse_family(std::string_view name) noexcept;

inline constexpr double kDefaultShearFloor = 1e-12;  // s^-2
/// |1 + gamma R| below this is treated as the pole in column evaluation.
inline constexpr double kSingularBand = 1e-8;
/// Value substituted for nu at a pole (m^2/s).
inline constexpr double kSingularCap = 1e3;

/// Closure family plus its coefficient set (all coefficients in m^2/s).
struct ClosureSpec {
    ClosureFamily family = ClosureFamily::R224;
    double alpha1 = 1e-4;
    double beta1 = 1e-2;
    double alpha2 = 1e-5;
    double beta2 = 1e-3;  // stored for R224 but not part of its diffusivity
    double gamma = 5.0;

    /// Standard coefficients for a family.
    static ClosureSpec defaults(ClosureFamily family);
    /// Pacanowski-Philander form with the OPA ocean-model coefficients.
    static ClosureSpec opa();

    /// The pole of f1 and f2.
    double singular_richardson() const noexcept { return -1.0 / gamma; }

    void validate() const;
};

struct RichardsonProfile {
    std::vector<double> values;
    double shear_floor = kDefaultShearFloor;
};

struct EddyCoefficients {
    std::vector<double> nu1;  // viscosity, m^2/s
    std::vector<double> nu2;  // diffusivity, m^2/s
    std::vector<std::size_t> negative_nu2_levels;
    /// Levels whose R fell within kSingularBand of the pole; both
    /// coefficients there hold kSingularCap.
    std::vector<std::size_t> singular_levels;
};

/// R = -(g/rho0) rho_z / max(u_z^2 + v_z^2, shear_floor), with backward
/// differences (level i minus level i-1). The bottom level copies level 1.
RichardsonProfile richardson_number(const StateProfiles& state,
                                    const ColumnGrid& grid,
                                    const ForcingAndConstants& constants,
                                    double shear_floor = kDefaultShearFloor);

/// Eddy viscosity alpha1 + beta1 / (1 + gamma R)^2.
/// Throws SingularityError when 1 + gamma R == 0 exactly.
double eval_f1(const ClosureSpec& spec, double richardson);

/// Eddy diffusivity. May be negative; callers decide whether that is usable.
///   R213: alpha2 + f1 / (1 + 5R)
///   R23:  alpha2 + beta2 / (1 + 10R)^3
///   R224: alpha2 + f1 / (1 + 5R)^2
double eval_f2(const ClosureSpec& spec, double richardson);

/// Applies f1/f2 levelwise. Never throws on poles: they are capped and flagged.
EddyCoefficients coefficients_profile(const ClosureSpec& spec,
                                      const RichardsonProfile& richardson);

struct CoefficientSample {
    double richardson;
    double f1;
    double f2;
};

struct CoefficientTable {
    std::vector<CoefficientSample> rows;
    std::vector<double> skipped;  // sample points that fell on the pole
};

/// Uniform samples of f1, f2 over [r_min, r_max]. Requires r_min < r_max and
/// n_samples >= 2.
CoefficientTable coefficient_table(const ClosureSpec& spec, double r_min,
                                   double r_max, std::size_t n_samples);

/// CSV with header `R,f1,f2`.
void write_csv(std::ostream& out, const CoefficientTable& table);

}  // namespace mixedcol
