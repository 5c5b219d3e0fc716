#include "tristab/linear_stability.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "tristab/errors.hpp"

namespace tristab {

namespace {
const double kSqrt3 = std::sqrt(3.0);
constexpr double kBoundaryTol = 1e-12;
constexpr double kResonanceRatioTol = 1e-9;
} // namespace

QuadraticForm quadratic_coeffs(double eps, double a2, double w1, double gamma,
                               double n) {
    QuadraticForm qf{};
    qf.e = (1.0 / 16.0) *
           (2.0 - 6.0 * eps - 3.0 * a2 - 31.0 * a2 * eps / 2.0 -
            69.0 * w1 / (6.0 * kSqrt3) +
            gamma * (2.0 * eps + 12.0 * a2 + a2 * eps / 3.0 +
                     199.0 * w1 / (6.0 * kSqrt3)));
    qf.f = (-1.0 / 16.0) *
           (10.0 - 2.0 * eps + 21.0 * a2 - 717.0 * a2 * eps / 18.0 -
            67.0 * w1 / (6.0 * kSqrt3) +
            gamma * (6.0 * eps - 293.0 * a2 * eps / 18.0 +
                     187.0 * w1 / (6.0 * kSqrt3)));
    qf.g_printed =
        (kSqrt3 / 8.0) *
        (2.0 * eps + 6.0 * a2 - 37.0 * a2 * eps / 2.0 -
         13.0 * w1 / (2.0 * kSqrt3) -
         gamma * (6.0 * eps - eps / 3.0 + 13.0 * a2 - 33.0 * a2 * eps / 2.0 +
                  11.0 * w1 / (2.0 * kSqrt3)));
    qf.g_corrected = qf.g_printed - (3.0 * kSqrt3 / 4.0) * gamma;
    qf.n = n;
    return qf;
}

QuadraticForm quadratic_coeffs(const SystemParams& p) {
    return quadratic_coeffs(p.eps, p.a2, p.w1, p.gamma, p.n);
}

Quartic characteristic_quartic(const QuadraticForm& qf, GVariant g) {
    const double gv = (g == GVariant::Corrected) ? qf.g_corrected : qf.g_printed;
    const double n2 = qf.n * qf.n;
    Quartic q{};
    q.c2 = 2.0 * (qf.e + qf.f + n2);
    q.c0 = 4.0 * qf.e * qf.f - gv * gv + n2 * n2 - 2.0 * n2 * (qf.e + qf.f);
    return q;
}

double stability_discriminant(const SystemParams& p) {
    return characteristic_quartic(quadratic_coeffs(p)).discriminant();
}

double mu_c0(double eps, double a2, double w1) {
    return 0.038521 - 0.221896 * eps + 2.103887 * a2 + 0.493433 * eps * a2 +
           0.704139 * w1 + 0.401154 * eps * w1;
}

SumProduct frequency_sum_product(const SystemParams& p) {
    const double g = p.gamma, e = p.eps, a2 = p.a2, w1 = p.w1;
    SumProduct sp{};
    sp.s = 1.0 - g * e / 2.0 + 3.0 * g * a2 / 2.0 + 83.0 * e * a2 / 12.0 -
           w1 / (24.0 * kSqrt3);
    sp.p = 27.0 / 16.0 - 27.0 * g * g / 16.0 + 9.0 * e / 8.0 +
           9.0 * g * e / 8.0 + 117.0 * g * a2 / 16.0 -
           241.0 * e * a2 / 32.0 + 35.0 * w1 / (16.0 * kSqrt3) -
           55.0 * kSqrt3 * g * w1 / 16.0;
    return sp;
}

FrequencyPair frequencies(const SystemParams& p) {
    const auto [s, prod] = frequency_sum_product(p);
    const double disc = s * s - 4.0 * prod;

    FrequencyPair fp{};
    if (std::abs(disc) <= kBoundaryTol) {
        if (s <= 0.0) {
            throw InstabilityError("degenerate boundary with non-positive "
                                   "frequency sum S = " + std::to_string(s));
        }
        fp.omega1 = fp.omega2 = std::sqrt(s / 2.0);
        fp.u = fp.omega1 * fp.omega2;
        fp.boundary = true;
        return fp;
    }
    if (disc < 0.0) {
        throw InstabilityError(
            "outside the linear-stability region: S^2 - 4P = " +
            std::to_string(disc) + " < 0 (complex squared frequencies)");
    }
    const double root = std::sqrt(disc);
    const double x_large = (s + root) / 2.0;
    const double x_small = (s - root) / 2.0;
    if (x_small <= 0.0) {
        throw InstabilityError(
            "outside the linear-stability region: smaller squared frequency " +
            std::to_string(x_small) + " <= 0");
    }
    fp.omega1 = std::sqrt(x_large);
    fp.omega2 = std::sqrt(x_small);
    fp.u = fp.omega1 * fp.omega2;
    const double ratio = fp.omega1 / fp.omega2;
    fp.resonance_2_1 = std::abs(ratio - 2.0) < kResonanceRatioTol;
    fp.resonance_3_1 = std::abs(ratio - 3.0) < kResonanceRatioTol;
    return fp;
}

double gamma_sq_from_frequency(double omega_j, const SystemParams& p) {
    const double g = p.gamma, e = p.eps, a2 = p.a2, w1 = p.w1;
    const double wjs = omega_j * omega_j;
    return 1.0 + 4.0 * e / 9.0 - 107.0 * e * a2 / 27.0 + 2.0 * g * e / 3.0 -
           25.0 * w1 / (27.0 * kSqrt3) +
           (-16.0 / 27.0 + 32.0 * e / 243.0 + 208.0 * a2 / 81.0 -
            8.0 * g * a2 / 27.0 - 4868.0 * e * a2 / 729.0 +
            296.0 * w1 / (243.0 * kSqrt3)) *
               wjs +
           (16.0 / 27.0 - 32.0 * e / 243.0 - 208.0 * a2 / 81.0 -
            1880.0 * e * a2 / 729.0 - 2720.0 * w1 / (2187.0 * kSqrt3)) *
               wjs * wjs;
}

double gamma_sq_from_product(double u, const SystemParams& p) {
    const double g = p.gamma, e = p.eps, a2 = p.a2, w1 = p.w1;
    const double usq = u * u;
    return 1.0 + 4.0 * e / 9.0 - 107.0 * e * a2 / 27.0 -
           25.0 * w1 / (27.0 * kSqrt3) +
           g * (2.0 * e / 3.0 + 1579.0 * e * a2 / 324.0 -
                55.0 * g * w1 / (9.0 * kSqrt3)) +
           (-16.0 / 27.0 + 32.0 * e / 243.0 + 208.0 * a2 / 81.0 -
            1880.0 * e * a2 / 729.0 + 320.0 * w1 / (243.0 * kSqrt3)) *
               usq;
}

std::array<std::complex<double>, 4> quartic_roots(const Quartic& q) {
    Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
    companion(1, 0) = 1.0;
    companion(2, 1) = 1.0;
    companion(3, 2) = 1.0;
    companion(0, 3) = -q.c0;
    companion(2, 3) = -q.c2;
    const Eigen::EigenSolver<Eigen::Matrix4d> solver(companion);
    std::array<std::complex<double>, 4> roots;
    for (int i = 0; i < 4; ++i) {
        roots[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
    }
    return roots;
}

} // namespace tristab
