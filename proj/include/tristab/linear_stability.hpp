#pragma once

#include <array>
#include <complex>

#include "tristab/params.hpp"

namespace tristab {

/// Quadratic-form coefficients of the second-order Hamiltonian at the
/// triangular point (coefficients of x^2, y^2, xy) plus the mean motion.
///
/// Two variants of the xy coefficient are carried: `g_printed` evaluates
/// the source derivation's display verbatim (it vanishes in the classical
/// limit), while `g_corrected` restores the classical leading term
/// -(3 sqrt(3)/4) gamma that the sum/product frequency relations require.
/// The corrected variant feeds every downstream computation.
struct QuadraticForm {
    double e;
    double f;
    double g_printed;
    double g_corrected;
    double n;
};

/// Evaluates E, F, G from the first-order expansions in (eps, a2, w1).
QuadraticForm quadratic_coeffs(const SystemParams& p);

/// Formula-level overload for probing limits the parameter record cannot
/// reach (e.g. gamma = 1).
QuadraticForm quadratic_coeffs(double eps, double a2, double w1, double gamma,
                               double n);

/// Characteristic quartic lambda^4 + c2 lambda^2 + c0 = 0.
struct Quartic {
    double c2;
    double c0;
    double discriminant() const { return c2 * c2 - 4.0 * c0; }
};

enum class GVariant { Corrected, Printed };

Quartic characteristic_quartic(const QuadraticForm& qf,
                               GVariant g = GVariant::Corrected);

/// Discriminant c2^2 - 4 c0 of the corrected-G quartic; positive inside
/// the linear-stability region.
double stability_discriminant(const SystemParams& p);

/// Linear-stability boundary in closed form (first order in each argument).
double mu_c0(double eps, double a2, double w1);

/// Long/short-period frequency pair, ordered omega1 > omega2.
struct FrequencyPair {
    double omega1;       ///< long-period frequency, in (1/sqrt(2), 1) inside the region
    double omega2;       ///< short-period frequency, in (0, 1/sqrt(2))
    double u;            ///< omega1 * omega2
    bool boundary;       ///< set when S^2 = 4P within 1e-12 (double frequency)
    bool resonance_2_1;  ///< omega1/omega2 within 1e-9 of 2
    bool resonance_3_1;  ///< omega1/omega2 within 1e-9 of 3
};

/// Sum S and product P of the squared frequencies from the first-order
/// relations; the frequencies solve X^2 - S X + P = 0.
struct SumProduct {
    double s;
    double p;
};

SumProduct frequency_sum_product(const SystemParams& p);

/// Solves X^2 - S X + P = 0 and returns (sqrt of larger root, sqrt of
/// smaller root). On the degenerate boundary S^2 = 4P (within 1e-12) both
/// frequencies equal sqrt(S/2) and the boundary flag is set.
///
/// Throws InstabilityError when S^2 < 4P (complex frequencies) or when the
/// smaller root is non-positive.
FrequencyPair frequencies(const SystemParams& p);

/// Evaluates the printed polynomial relation gamma^2(omega_j^2; eps, a2, w1,
/// gamma). An identity check of the frequency relations, not a solver: the
/// first-order gamma terms on the right side use params.gamma.
double gamma_sq_from_frequency(double omega_j, const SystemParams& p);

/// Same inversion driven by u^2 = (omega1 omega2)^2.
double gamma_sq_from_product(double u, const SystemParams& p);

/// Companion-matrix eigenvalues of the quartic: the cross-check oracle for
/// frequencies(). Roots come back unordered.
std::array<std::complex<double>, 4> quartic_roots(const Quartic& q);

} // namespace tristab
