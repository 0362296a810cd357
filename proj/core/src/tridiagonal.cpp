#include "mixedcol/tridiagonal.hpp"

#include <cmath>
#include <string>

#include "mixedcol/errors.hpp"

namespace mixedcol {

std::vector<double> solve_tridiagonal(const TridiagonalSystem& system) {
    const std::size_t n = system.size();
    if (system.lower.size() != n || system.upper.size() != n || system.rhs.size() != n) {
        throw DimensionError("tridiagonal bands have mismatched lengths");
    }
    if (n == 0) return {};

    std::vector<double> c(n, 0.0);
    std::vector<double> x(n, 0.0);
    double pivot = system.diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) pivot = system.diag[i] - system.lower[i] * c[i - 1];
        if (pivot == 0.0 || !std::isfinite(pivot)) {
            throw NumericalError("singular tridiagonal system at row " + std::to_string(i));
        }
        c[i] = i + 1 < n ? system.upper[i] / pivot : 0.0;
        const double carried = i > 0 ? system.lower[i] * x[i - 1] : 0.0;
        x[i] = (system.rhs[i] - carried) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
    return x;
}

std::size_t count_non_dominant_rows(const TridiagonalSystem& system) noexcept {
    const std::size_t n = system.size();
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double off = (i > 0 ? std::abs(system.lower[i]) : 0.0) +
                           (i + 1 < n ? std::abs(system.upper[i]) : 0.0);
        if (std::abs(system.diag[i]) < off) ++count;
    }
    return count;
}

}  // namespace mixedcol
