#include "tristab/equilibria.hpp"

#include <cmath>

#include "tristab/dynamics.hpp"
#include "tristab/errors.hpp"

namespace tristab {

namespace {

/// L4 (upper-branch) coordinates of the first-order-perturbed point.
std::pair<double, double> full_point_L4(const SystemParams& p) {
    const double d2 = p.delta * p.delta;
    const double x0 = d2 / 2.0 - p.mu;
    const double y0 = p.delta * std::sqrt(1.0 - d2 / 4.0);
    const double mu = p.mu, a2 = p.a2, w1 = p.w1, n = p.n;

    // Multiplied-through abscissa: the braced form's x0 factors cancel.
    const double xs =
        x0 -
        n * w1 *
            ((1.0 - mu) * (1.0 + 2.5 * a2) + mu * (1.0 - 0.5 * a2) * (d2 / 2.0)) /
            (3.0 * mu * (1.0 - mu) * y0) -
        (d2 / 2.0) * a2;

    const double bracket =
        1.0 -
        n * w1 * d2 *
            (2.0 * mu - 1.0 - mu * (1.0 - 1.5 * a2) * (d2 / 2.0) +
             7.0 * (1.0 - mu) * a2 / 2.0) /
            (3.0 * mu * (1.0 - mu) * y0 * y0 * y0) -
        d2 * (1.0 - d2 / 2.0) * a2 / (y0 * y0);
    if (bracket < 0.0) {
        throw DegeneratePointError(
            "ordinate square-root factor negative (" +
            std::to_string(bracket) + "): parameters outside the point "
            "formula's validity");
    }
    return {xs, y0 * std::sqrt(bracket)};
}

} // namespace

double Residual::norm() const { return std::hypot(rx, ry); }

EquilibriumPoint triangular_point_full(const SystemParams& p, Branch branch) {
    auto [x, y] = full_point_L4(p);
    if (branch == Branch::L5) y = -y;
    return {x, y, branch, PointFormula::Full};
}

SeriesPoint series_point_L4(const SystemParams& p) {
    const double g = p.gamma, e = p.eps, a2 = p.a2, w1 = p.w1;
    const double s3 = std::sqrt(3.0);
    SeriesPoint sp{};
    sp.x = g / 2.0 - e / 3.0 - a2 / 2.0 + a2 * e / 3.0 -
           (9.0 + g) * w1 / (6.0 * s3) - 4.0 * g * e * w1 / (27.0 * s3);
    sp.y = (s3 / 2.0) * (1.0 - 2.0 * e / 9.0 - a2 / 3.0 - 2.0 * a2 * e / 9.0 +
                         (1.0 + g) * w1 / (9.0 * s3) -
                         4.0 * g * e * w1 / (27.0 * s3));
    sp.a = 0.5 * (1.0 - 2.0 * e / 3.0 - a2 + 2.0 * a2 * e / 3.0 -
                  (9.0 + g) * w1 / (3.0 * s3) -
                  8.0 * g * e * w1 / (27.0 * s3));
    sp.b = sp.y;
    sp.eps_warning = e > 0.1;
    return sp;
}

EquilibriumPoint classical_point(const SystemParams& p, Branch branch) {
    const double d2 = p.delta * p.delta;
    const double x0 = d2 / 2.0 - p.mu;
    double y0 = p.delta * std::sqrt(1.0 - d2 / 4.0);
    if (branch == Branch::L5) y0 = -y0;
    return {x0, y0, branch, PointFormula::Classical};
}

Residual equilibrium_residual(const EquilibriumPoint& pt,
                              const SystemParams& p) {
    const PhaseState rest{pt.x, pt.y, 0.0, 0.0, 0.0};
    const auto [ax, ay] = acceleration(rest, p);
    return {ax, ay};
}

} // namespace tristab
