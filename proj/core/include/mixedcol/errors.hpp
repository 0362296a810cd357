#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixedcol {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Array lengths disagree with each other or with the grid.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A closure function was evaluated exactly at its pole R = -1/gamma.
class SingularityError : public Error {
public:
    explicit SingularityError(double richardson);
    double richardson() const noexcept { return richardson_; }

private:
    double richardson_;
};

/// The eddy diffusivity is negative somewhere in the column, so the closure
/// cannot be used on this state.
class ModelInvalidError : public Error {
public:
    ModelInvalidError(std::vector<std::size_t> levels, std::vector<double> depths);

    /// 0-based level indices (0 = bottom) carrying a negative diffusivity.
    const std::vector<std::size_t>& levels() const noexcept { return levels_; }
    /// z coordinate of each offending level (m, negative down).
    const std::vector<double>& depths() const noexcept { return depths_; }

private:
    std::vector<std::size_t> levels_;
    std::vector<double> depths_;
};

/// Linear algebra failure (zero pivot, non-finite result).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Function evaluated outside the region where it is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// k(R) = C R has no crossing inside the scanned interval.
class NoEquilibriumError : public Error {
public:
    using Error::Error;
};

/// Q = 0 leaves the equilibrium line slope undefined.
class DegenerateForcingError : public Error {
public:
    using Error::Error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input whose content is inconsistent (duplicate depths, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace mixedcol
