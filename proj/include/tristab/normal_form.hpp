#pragma once

#include <array>
#include <vector>

#include "tristab/detail/factor_guards.hpp"
#include "tristab/linear_stability.hpp"
#include "tristab/params.hpp"

namespace tristab {

/// Which value to use for the anomalous cubic coefficient inside the a13
/// expansion kernel: Verbatim keeps the transcribed 8141559/32, Symmetric
/// substitutes 407/16 (the value the structurally parallel c13 term uses).
enum class A13Variant { Verbatim, Symmetric };

/// The three 7-entry tables of first-order expansion coefficients behind
/// the fourth-order normal-form coefficients:
///   A = a1[0] + (a1[1] + a1[2] g) eps + (a1[3] + a1[4] g) a2
///             + (a1[5] + a1[6] g) w1,
/// and the same pattern for B via b1 and C via c1.
struct CoeffTables {
    std::array<double, 7> a1;
    std::array<double, 7> b1;
    std::array<double, 7> c1;
};

/// Evaluates all 21 expansion-coefficient functions at the given frequency
/// pair after running the named singular-factor guards.
///
/// Throws SingularFactorError (naming the factor) when any of
/// (-1+2*omega_j^2), (-1+5*omega_j^2), (4*omega1^2-omega2^2),
/// (omega1^2-4*omega2^2), (1-2*omega2), omega1, or omega2 is within
/// kSingularFactorTol of zero.
CoeffTables coeff_tables(double omega1, double omega2,
                         A13Variant variant = A13Variant::Verbatim);

/// Fourth-order normal-form data at a parameter point.
struct NormalFormCoeffs {
    double a;             ///< I1^2 coefficient (times 1/2 in H)
    double b;             ///< I1 I2 coefficient
    double c;             ///< I2^2 coefficient (times 1/2 in H)
    double a_alternate;   ///< A reassembled with the Symmetric a13 variant
    CoeffTables tables;
    bool resonance_adjacent; ///< |omega1 - 2 omega2| or |omega1 - 3 omega2| < 1e-4
};

/// Assembles A, B, C from the coefficient tables and the parameter record.
NormalFormCoeffs normal_form_abc(const SystemParams& p,
                                 const FrequencyPair& freqs);

/// Action-angle variables. Angles are kept reduced to [0, 2 pi).
struct ActionPair {
    double i1;
    double i2;
    double phi1 = 0.0;
    double phi2 = 0.0;
};

/// H = omega1 I1 - omega2 I2 + (1/2)(A I1^2 + 2 B I1 I2 + C I2^2).
double normalized_hamiltonian(const ActionPair& actions,
                              const FrequencyPair& freqs,
                              const NormalFormCoeffs& nf);

/// First-order frequency corrections f2 = A I1 + B I2, g2 = B I1 + C I2.
struct FrequencyCorrections {
    double f2;
    double g2;
};

FrequencyCorrections frequency_corrections(const NormalFormCoeffs& nf,
                                           double i1, double i2);

/// Divisor [omega1^2 - (p omega1 - q omega2)^2] *
///         [omega2^2 - (p omega1 - q omega2)^2].
double moser_divisor(const FrequencyPair& freqs, int p, int q);

/// Non-resonance scan: every integer combination k1 omega1 + k2 omega2 with
/// 0 < |k1|+|k2| <= 4, plus the five divisor values the normalization needs.
struct MoserReport {
    struct Combination {
        int k1;
        int k2;
        double value; ///< k1 omega1 + k2 omega2
    };
    Combination min_combination;  ///< smallest |value| over the scan
    struct Divisor {
        int p;
        int q;
        double value;
    };
    std::array<Divisor, 5> divisors; ///< (0,0), (2,0), (0,2), (1,1), (1,-1)
    double smallest_divisor_abs;
    bool resonant; ///< min |combination| below 1e-5
};

MoserReport moser_divisor_check(const FrequencyPair& freqs);

} // namespace tristab
