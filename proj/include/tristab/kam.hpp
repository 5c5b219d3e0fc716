#pragma once

#include <array>

#include "tristab/linear_stability.hpp"
#include "tristab/normal_form.hpp"
#include "tristab/params.hpp"

namespace tristab {

/// Classical (eps = a2 = w1 = 0) locations of the four stability
/// boundaries. The drag strength entering each perturbed closed form is
/// evaluated once at that boundary's classical location.
inline constexpr double kClassicalMuC0 = 0.038521;
inline constexpr double kClassicalMuC1 = 0.024294;
inline constexpr double kClassicalMuC2 = 0.013516;
inline constexpr double kClassicalMuC3 = 0.010914;

/// Closed-form resonance critical mass for omega1 = 2 omega2 (first order
/// in each argument).
double mu_c1(double eps, double a2, double w1);

/// Same boundary from the perturbed resonance quadratic in mu; selects the
/// root in (0, 1/2). Throws NoRealRootError when the discriminant is
/// negative and DomainError when neither root lands in (0, 1/2).
double mu_c1_quadratic(double eps, double a2, double w1);

/// Closed-form resonance critical mass for omega1 = 3 omega2.
double mu_c2(double eps, double a2, double w1);

double mu_c2_quadratic(double eps, double a2, double w1);

/// Closed-form determinant-degeneracy critical mass.
double mu_c3_closed(double eps, double a2, double w1);

/// First-order expansion coefficients of the KAM determinant,
/// D = d_classical + (d2 + d3 g) eps + (d4 + d5 g) a2 + (d6 + d7 g) w1.
struct DeterminantExpansion {
    double d2, d3, d4, d5, d6, d7;
};

/// Evaluates the six expansion coefficients after the named singular-factor
/// guards (throws SingularFactorError).
DeterminantExpansion determinant_expansion(double omega1, double omega2);

/// Classical determinant term (644 u^4 - 541 u^2 + 36) /
/// (8 (4u^2-1)(25u^2-4)). Throws SingularFactorError naming "(4*u^2-1)" or
/// "(25*u^2-4)" at the poles.
double kam_d_classical(double u_sq);

/// Assembled KAM determinant at a parameter point.
struct KamDeterminantParts {
    double u;           ///< omega1 * omega2
    double d_classical; ///< the u-rational classical term
    DeterminantExpansion expansion;
    double total;
};

KamDeterminantParts kam_determinant(const SystemParams& p,
                                    const FrequencyPair& freqs);

/// Diagnostic assembly -(A omega2^2 + 2 B omega1 omega2 + C omega1^2) from
/// the normal-form coefficients. Compared against kam_determinant in
/// reports; the two are NOT asserted to agree (the coefficient-table
/// transcription carries visible defects, see errata_report).
double kam_determinant_diagnostic(const FrequencyPair& freqs,
                                  const NormalFormCoeffs& nf);

/// The mu_c3 derivation chain: unperturbed double-zero u0 of the classical
/// determinant, the matching gamma0/mu0, the six bridge constants u1..u6,
/// the first-order shifts alpha1..alpha3 assembled from the determinant
/// expansion at the unperturbed frequencies, and the resulting boundary.
struct MuC3Pipeline {
    double u0;
    double gamma0;
    double mu0;
    std::array<double, 6> u_consts;  ///< u1..u6
    DeterminantExpansion d_unperturbed;
    std::array<double, 3> alpha;     ///< alpha1..alpha3
    double mu_c3;                    ///< mu0 + alpha1 eps + alpha2 a2 + alpha3 w1
};

MuC3Pipeline mu_c3_pipeline(double eps, double a2, double w1);

/// One critical mass with its applicability flag (true when the value lies
/// inside the linear-stability range (0, mu_c0)).
struct CriticalMass {
    double value;
    bool applicable;
};

/// All four boundaries at given (q1, a2, cd). The drag strength entering
/// each closed form is evaluated once at that boundary's classical
/// candidate mass (no self-consistent iteration): w1_i = (1 - mu_i^0)
/// (1 - q1)/cd with mu_i^0 the classical value of that boundary.
struct CriticalMassSet {
    CriticalMass c0, c1, c2, c3;
};

CriticalMassSet critical_masses(double q1, double a2,
                                double cd = kDefaultLightSpeed);

/// Nonlinear-stability classification of a configuration.
enum class Verdict {
    KamStable,         ///< inside (0, mu_c0), away from mu_c1/mu_c2/mu_c3
    LinearlyUnstable,  ///< mu >= mu_c0
    ResonanceExcluded, ///< |mu - mu_c1| or |mu - mu_c2| within tol
    DegenerateDeterminant ///< |mu - mu_c3| within tol
};

const char* verdict_name(Verdict v);

/// Numeric code for plotting grids: KamStable 0, LinearlyUnstable 1,
/// ResonanceExcluded 2, DegenerateDeterminant 3.
int verdict_code(Verdict v);

struct Classification {
    Verdict verdict;
    CriticalMassSet masses;
};

Classification classify(double mu, double q1, double a2,
                        double cd = kDefaultLightSpeed, double tol = 1e-6);

} // namespace tristab
