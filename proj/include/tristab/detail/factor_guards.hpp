#pragma once

#include <cmath>

#include "tristab/errors.hpp"

namespace tristab {

/// Denominator factors smaller than this (in absolute value) are treated as
/// singular and reported by name.
inline constexpr double kSingularFactorTol = 1e-9;

namespace detail {

inline void require_nonsingular(const char* name, double value) {
    if (std::abs(value) <= kSingularFactorTol) {
        throw SingularFactorError(name, value);
    }
}

/// Checks every denominator factor appearing in the fourth-order
/// coefficient tables and the determinant expansion. The (1-2*omega2)
/// factor occurs only in the drag columns of the coefficient tables, so
/// callers that never touch those columns skip it.
inline void guard_frequency_pair(double omega1, double omega2,
                                 bool with_drag_factors) {
    const double s1 = omega1 * omega1;
    const double s2 = omega2 * omega2;
    require_nonsingular("omega1", omega1);
    require_nonsingular("omega2", omega2);
    require_nonsingular("(-1+2*omega1^2)", -1.0 + 2.0 * s1);
    require_nonsingular("(-1+5*omega1^2)", -1.0 + 5.0 * s1);
    require_nonsingular("(-1+2*omega2^2)", -1.0 + 2.0 * s2);
    require_nonsingular("(-1+5*omega2^2)", -1.0 + 5.0 * s2);
    require_nonsingular("(4*omega1^2-omega2^2)", 4.0 * s1 - s2);
    require_nonsingular("(omega1^2-4*omega2^2)", s1 - 4.0 * s2);
    if (with_drag_factors) {
        require_nonsingular("(1-2*omega2)", 1.0 - 2.0 * omega2);
    }
}

} // namespace detail
} // namespace tristab
