#include "mixedcol/output.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>

#include "mixedcol/errors.hpp"

namespace mixedcol {

std::string format_double(double value) {
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw NumericalError("cannot format value");
    return std::string(buf.data(), end);
}

void write_state_csv(std::ostream& out, const StateProfiles& state, const ColumnGrid& grid) {
    state.validate(grid.n_levels);
    out << "z,u,v,rho\n";
    for (std::size_t i = 0; i < grid.n_levels; ++i) {
        out << format_double(grid.z(i)) << ',' << format_double(state.u[i]) << ','
            << format_double(state.v[i]) << ',' << format_double(state.rho[i]) << '\n';
    }
}

void write_residuals_csv(std::ostream& out, const RunResult& result, double dt) {
    out << "step,time_s,r\n";
    for (std::size_t n = 0; n < result.residuals.size(); ++n) {
        out << (n + 1) << ',' << format_double(static_cast<double>(n + 1) * dt) << ','
            << format_double(result.residuals[n]) << '\n';
    }
}

void write_nu_csv(std::ostream& out, const EddyCoefficients& nu, const ColumnGrid& grid) {
    if (nu.nu1.size() != grid.n_levels || nu.nu2.size() != grid.n_levels) {
        throw DimensionError("eddy coefficient length does not match grid");
    }
    out << "z,nu1,nu2\n";
    for (std::size_t i = 0; i < grid.n_levels; ++i) {
        out << format_double(grid.z(i)) << ',' << format_double(nu.nu1[i]) << ','
            << format_double(nu.nu2[i]) << '\n';
    }
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    return out;
}

}  // namespace

void write_run(const std::filesystem::path& directory, const RunResult& result,
               const ColumnGrid& grid, double dt) {
    std::filesystem::create_directories(directory);
    {
        auto out = open_for_write(directory / "state.csv");
        write_state_csv(out, result.final_state, grid);
    }
    {
        auto out = open_for_write(directory / "residuals.csv");
        write_residuals_csv(out, result, dt);
    }
    {
        auto out = open_for_write(directory / "nu.csv");
        write_nu_csv(out, result.nu_final, grid);
    }
}

}  // namespace mixedcol
