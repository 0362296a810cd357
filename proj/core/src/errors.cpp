#include "mixedcol/errors.hpp"

#include <sstream>

namespace mixedcol {

namespace {

std::string singular_message(double richardson) {
    std::ostringstream os;
    os << "closure evaluated at its pole R = " << richardson;
    return os.str();
}

std::string invalid_message(const std::vector<std::size_t>& levels,
                            const std::vector<double>& depths) {
    std::ostringstream os;
    os << "negative eddy coefficient at " << levels.size() << " level(s):";
    for (std::size_t i = 0; i < levels.size(); ++i) {
        os << ' ' << levels[i];
        if (i < depths.size()) os << " (z=" << depths[i] << " m)";
    }
    return os.str();
}

}  // namespace

SingularityError::SingularityError(double richardson)
    : Error(singular_message(richardson)), richardson_(richardson) {}

ModelInvalidError::ModelInvalidError(std::vector<std::size_t> levels,
                                     std::vector<double> depths)
    : Error(invalid_message(levels, depths)),
      levels_(std::move(levels)),
      depths_(std::move(depths)) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace mixedcol
