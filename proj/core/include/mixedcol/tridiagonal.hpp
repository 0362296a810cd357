#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mixedcol {

/// Row i reads lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i].
/// lower[0] and upper[n-1] are ignored.
struct TridiagonalSystem {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;
    std::vector<double> rhs;

    explicit TridiagonalSystem(std::size_t n)
        : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0) {}

    std::size_t size() const noexcept { return diag.size(); }
};

/// Thomas elimination without pivoting. Throws NumericalError on a zero or
/// non-finite pivot.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& system);

/// Number of rows with |diag| < |lower| + |upper|.
std::size_t count_non_dominant_rows(const TridiagonalSystem& system) noexcept;

}  // namespace mixedcol
