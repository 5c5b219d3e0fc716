#include "tristab/kam.hpp"

#include <cmath>

#include "tristab/coeff_kernels.hpp"
#include "tristab/detail/factor_guards.hpp"
#include "tristab/errors.hpp"

namespace tristab {

namespace {

const double kSqrt3 = std::sqrt(3.0);

struct QuadraticCoeffs {
    double a, b, c;
};

/// Selects the root of a mu^2 + b mu + c = 0 inside (0, 1/2), preferring
/// the smaller one when both qualify.
double root_in_half_interval(const QuadraticCoeffs& q) {
    const double disc = q.b * q.b - 4.0 * q.a * q.c;
    if (disc < 0.0) {
        throw NoRealRootError(
            "resonance quadratic has no real root (negative discriminant)");
    }
    // Citardauq split keeps both roots accurate when b dominates.
    const double sign_b = q.b >= 0.0 ? 1.0 : -1.0;
    const double t = -0.5 * (q.b + sign_b * std::sqrt(disc));
    double r1 = t / q.a;
    double r2 = (t != 0.0) ? q.c / t : -q.b / q.a - r1;
    if (r1 > r2) std::swap(r1, r2);
    if (r1 > 0.0 && r1 < 0.5) return r1;
    if (r2 > 0.0 && r2 < 0.5) return r2;
    throw DomainError("no root of the resonance quadratic lies in (0, 1/2)");
}

void validate_sweep_inputs(double q1, double a2, double cd) {
    if (!(std::isfinite(q1) && std::isfinite(a2) && std::isfinite(cd))) {
        throw DomainError("q1, a2, cd must be finite");
    }
    if (!(q1 > 0.0 && q1 <= 1.0)) {
        throw DomainError("q1 must lie in (0, 1]");
    }
    if (a2 < 0.0) {
        throw DomainError("a2 must be non-negative");
    }
    if (!(cd > 0.0)) {
        throw DomainError("cd must be positive");
    }
}

} // namespace

double mu_c1(double eps, double a2, double w1) {
    return 0.024294 - 0.312692 * eps - 0.036851 * a2 + 1.001052 * w1;
}

double mu_c1_quadratic(double eps, double a2, double w1) {
    QuadraticCoeffs q{};
    q.a = -27.0 / 4.0 - 1.5 * eps - 117.0 / 4.0 * a2
          - 221.0 / (15.0 * kSqrt3) * w1;
    q.b = 27.0 / 4.0 - 107.0 / 100.0 * eps + 3021.0 / 100.0 * a2
          + 4291.0 / (120.0 * kSqrt3) * w1;
    q.c = -4.0 / 25.0 + 407.0 / 200.0 * eps - 12.0 / 25.0 * a2
          - 23991.0 / (200.0 * kSqrt3) * w1;
    return root_in_half_interval(q);
}

double mu_c2(double eps, double a2, double w1) {
    return 0.013516 - 0.29724 * eps - 0.019383 * a2 + 1.007682 * w1;
}

double mu_c2_quadratic(double eps, double a2, double w1) {
    QuadraticCoeffs q{};
    q.a = -27.0 / 4.0 - 1.5 * eps - 117.0 / 4.0 * a2
          - 99.0 * kSqrt3 / 20.0 * w1;
    q.b = 27.0 / 4.0 - 93.0 / 100.0 * eps + 2979.0 / 100.0 * a2
          + 119.0 * kSqrt3 / 10.0 * w1;
    q.c = -9.0 / 100.0 + 393.0 / 200.0 * eps - 27.0 / 100.0 * a2
          - 4777.0 / (400.0 * kSqrt3) * w1;
    return root_in_half_interval(q);
}

double mu_c3_closed(double eps, double a2, double w1) {
    return 0.010914 - 0.120489 * eps - 0.373118 * a2 + 2.904291 * w1;
}

DeterminantExpansion determinant_expansion(double omega1, double omega2) {
    detail::guard_frequency_pair(omega1, omega2, /*with_drag_factors=*/false);
    const double s1 = omega1 * omega1;
    const double s2 = omega2 * omega2;
    namespace k = kernels;
    DeterminantExpansion e{};
    e.d2 = k::d2(s1, s2);
    e.d3 = k::d3(omega1, omega2, s1, s2);
    e.d4 = k::d4(s1, s2);
    e.d5 = k::d5(s1, s2);
    e.d6 = k::d6(s1, s2, kSqrt3);
    e.d7 = k::d7(s1, s2, kSqrt3);
    return e;
}

double kam_d_classical(double u_sq) {
    const double f1 = 4.0 * u_sq - 1.0;
    const double f2 = 25.0 * u_sq - 4.0;
    detail::require_nonsingular("(4*u^2-1)", f1);
    detail::require_nonsingular("(25*u^2-4)", f2);
    const double numerator = (644.0 * u_sq - 541.0) * u_sq + 36.0;
    return numerator / (8.0 * f1 * f2);
}

KamDeterminantParts kam_determinant(const SystemParams& p,
                                    const FrequencyPair& freqs) {
    KamDeterminantParts parts{};
    parts.u = freqs.u;
    parts.d_classical = kam_d_classical(freqs.u * freqs.u);
    parts.expansion = determinant_expansion(freqs.omega1, freqs.omega2);
    const DeterminantExpansion& e = parts.expansion;
    parts.total = parts.d_classical + (e.d2 + e.d3 * p.gamma) * p.eps
                  + (e.d4 + e.d5 * p.gamma) * p.a2
                  + (e.d6 + e.d7 * p.gamma) * p.w1;
    return parts;
}

double kam_determinant_diagnostic(const FrequencyPair& freqs,
                                  const NormalFormCoeffs& nf) {
    const double w1 = freqs.omega1;
    const double w2 = freqs.omega2;
    return -(nf.a * w2 * w2 + 2.0 * nf.b * w1 * w2 + nf.c * w1 * w1);
}

MuC3Pipeline mu_c3_pipeline(double eps, double a2, double w1) {
    MuC3Pipeline pipe{};
    pipe.u0 = (541.0 - std::sqrt(199945.0)) / 1288.0;
    pipe.gamma0 = std::sqrt(1.0 - 16.0 * pipe.u0 / 27.0);
    pipe.mu0 = 0.5 * (1.0 - pipe.gamma0);

    const double g0 = pipe.gamma0;
    pipe.u_consts = {
        27.0 / 16.0 * g0 * g0 + 9.0 / 8.0 * g0 + 9.0 / 8.0, // u1
        27.0 / 4.0 * g0,                                    // u2
        117.0 / 16.0 * (1.0 - g0 * g0),                     // u3
        27.0 / 4.0 * g0,                                    // u4
        (27.0 * g0 * g0 + 165.0 * g0 + 35.0) / (16.0 * kSqrt3), // u5
        27.0 * g0 / (4.0 * kSqrt3),                         // u6
    };

    // Unperturbed frequencies: omega^2 are the roots of X^2 - X + u0.
    const double root = std::sqrt(1.0 - 4.0 * pipe.u0);
    const double omega1 = std::sqrt(0.5 * (1.0 + root));
    const double omega2 = std::sqrt(0.5 * (1.0 - root));
    pipe.d_unperturbed = determinant_expansion(omega1, omega2);
    const DeterminantExpansion& e = pipe.d_unperturbed;

    // The shift formulas share the structure
    //   alpha = -((1288 u0 - 541) u_odd + 8 Dpair (4u0-1)(25u0-4))
    //           / (u_even (1288 u0 - 541)).
    const double slope = 1288.0 * pipe.u0 - 541.0;
    const double pole_product =
        (4.0 * pipe.u0 - 1.0) * (25.0 * pipe.u0 - 4.0);
    const auto alpha = [&](double u_odd, double u_even, double d_pair) {
        return -(slope * u_odd + 8.0 * d_pair * pole_product)
               / (u_even * slope);
    };
    pipe.alpha = {
        alpha(pipe.u_consts[0], pipe.u_consts[1], e.d2 + e.d3 * g0),
        alpha(pipe.u_consts[2], pipe.u_consts[3], e.d4 + e.d5 * g0),
        alpha(pipe.u_consts[4], pipe.u_consts[5], e.d6 + e.d7 * g0),
    };
    pipe.mu_c3 = pipe.mu0 + pipe.alpha[0] * eps + pipe.alpha[1] * a2
                 + pipe.alpha[2] * w1;
    return pipe;
}

CriticalMassSet critical_masses(double q1, double a2, double cd) {
    validate_sweep_inputs(q1, a2, cd);
    const double eps = 1.0 - q1;
    const auto drag_at = [&](double classical_mu) {
        return (1.0 - classical_mu) * eps / cd;
    };
    CriticalMassSet set{};
    set.c0.value = mu_c0(eps, a2, drag_at(kClassicalMuC0));
    set.c1.value = mu_c1(eps, a2, drag_at(kClassicalMuC1));
    set.c2.value = mu_c2(eps, a2, drag_at(kClassicalMuC2));
    set.c3.value = mu_c3_closed(eps, a2, drag_at(kClassicalMuC3));
    set.c0.applicable = set.c0.value > 0.0 && set.c0.value < 0.5;
    const auto in_range = [&](double v) {
        return v > 0.0 && v < set.c0.value;
    };
    set.c1.applicable = in_range(set.c1.value);
    set.c2.applicable = in_range(set.c2.value);
    set.c3.applicable = in_range(set.c3.value);
    return set;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::KamStable: return "kam-stable";
        case Verdict::LinearlyUnstable: return "linearly-unstable";
        case Verdict::ResonanceExcluded: return "resonance-excluded";
        case Verdict::DegenerateDeterminant: return "degenerate-D";
    }
    return "unknown";
}

int verdict_code(Verdict v) {
    switch (v) {
        case Verdict::KamStable: return 0;
        case Verdict::LinearlyUnstable: return 1;
        case Verdict::ResonanceExcluded: return 2;
        case Verdict::DegenerateDeterminant: return 3;
    }
    return -1;
}

Classification classify(double mu, double q1, double a2, double cd,
                        double tol) {
    derive_params(mu, q1, a2, cd); // reuse the full input validation
    if (!(std::isfinite(tol) && tol > 0.0)) {
        throw DomainError("classification tolerance must be positive");
    }
    Classification result{};
    result.masses = critical_masses(q1, a2, cd);
    const CriticalMassSet& m = result.masses;
    if (mu > m.c0.value) {
        result.verdict = Verdict::LinearlyUnstable;
    } else if (std::abs(mu - m.c1.value) < tol ||
               std::abs(mu - m.c2.value) < tol) {
        result.verdict = Verdict::ResonanceExcluded;
    } else if (std::abs(mu - m.c3.value) < tol) {
        result.verdict = Verdict::DegenerateDeterminant;
    } else {
        result.verdict = Verdict::KamStable;
    }
    return result;
}

} // namespace tristab
