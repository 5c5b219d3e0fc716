#include "tristab/normal_form.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "tristab/coeff_kernels.hpp"
#include "tristab/errors.hpp"

namespace tristab {

namespace {

const double kSqrt3 = std::sqrt(3.0);

constexpr double kResonanceAdjacentGap = 1e-4;
constexpr double kResonantCombinationTol = 1e-5;

} // namespace

CoeffTables coeff_tables(double omega1, double omega2, A13Variant variant) {
    detail::guard_frequency_pair(omega1, omega2, /*with_drag_factors=*/true);
    const double s1 = omega1 * omega1;
    const double s2 = omega2 * omega2;
    const double u = omega1 * omega2;
    const bool anomalous = variant == A13Variant::Verbatim;

    namespace k = kernels;
    CoeffTables t{};
    t.a1 = {k::a11(s1),         k::a12(s1), k::a13(s1, anomalous),
            k::a14(s1),         k::a15(s1), k::a16(s1, kSqrt3),
            k::a17(omega1, s1, s2, kSqrt3)};
    t.b1 = {k::b11(s1, s2, u),         k::b12(s1, s2, u),
            k::b13(s1, s2, u),         k::b14(s1, s2, u),
            k::b15(s1, s2, u),         k::b16(s1, s2, u, kSqrt3),
            k::b17(omega2, s1, s2, u, kSqrt3)};
    t.c1 = {k::c11(s1, s2), k::c12(s2),         k::c13(s1, s2),
            k::c14(s2),     k::c15(s2),         k::c16(s2, kSqrt3),
            k::c17(omega2, s1, s2, kSqrt3)};
    return t;
}

namespace {

double assemble(const std::array<double, 7>& t, const SystemParams& p) {
    return t[0] + (t[1] + t[2] * p.gamma) * p.eps +
           (t[3] + t[4] * p.gamma) * p.a2 + (t[5] + t[6] * p.gamma) * p.w1;
}

} // namespace

NormalFormCoeffs normal_form_abc(const SystemParams& p,
                                 const FrequencyPair& freqs) {
    NormalFormCoeffs nf{};
    nf.tables = coeff_tables(freqs.omega1, freqs.omega2, A13Variant::Verbatim);
    nf.a = assemble(nf.tables.a1, p);
    nf.b = assemble(nf.tables.b1, p);
    nf.c = assemble(nf.tables.c1, p);

    const CoeffTables alt =
        coeff_tables(freqs.omega1, freqs.omega2, A13Variant::Symmetric);
    nf.a_alternate = assemble(alt.a1, p);

    nf.resonance_adjacent =
        std::abs(freqs.omega1 - 2.0 * freqs.omega2) < kResonanceAdjacentGap ||
        std::abs(freqs.omega1 - 3.0 * freqs.omega2) < kResonanceAdjacentGap;
    return nf;
}

double normalized_hamiltonian(const ActionPair& actions,
                              const FrequencyPair& freqs,
                              const NormalFormCoeffs& nf) {
    if (actions.i1 < 0.0 || actions.i2 < 0.0) {
        throw DomainError("action variables must be non-negative");
    }
    const double i1 = actions.i1, i2 = actions.i2;
    return freqs.omega1 * i1 - freqs.omega2 * i2 +
           0.5 * (nf.a * i1 * i1 + 2.0 * nf.b * i1 * i2 + nf.c * i2 * i2);
}

FrequencyCorrections frequency_corrections(const NormalFormCoeffs& nf,
                                           double i1, double i2) {
    return {nf.a * i1 + nf.b * i2, nf.b * i1 + nf.c * i2};
}

double moser_divisor(const FrequencyPair& freqs, int p, int q) {
    const double combo = p * freqs.omega1 - q * freqs.omega2;
    const double cs = combo * combo;
    return (freqs.omega1 * freqs.omega1 - cs) *
           (freqs.omega2 * freqs.omega2 - cs);
}

MoserReport moser_divisor_check(const FrequencyPair& freqs) {
    MoserReport report{};
    double best = std::numeric_limits<double>::infinity();
    for (int k1 = -4; k1 <= 4; ++k1) {
        for (int k2 = -4; k2 <= 4; ++k2) {
            const int order = std::abs(k1) + std::abs(k2);
            if (order == 0 || order > 4) continue;
            const double value = k1 * freqs.omega1 + k2 * freqs.omega2;
            if (std::abs(value) < std::abs(best)) {
                best = value;
                report.min_combination = {k1, k2, value};
            }
        }
    }

    constexpr std::array<std::array<int, 2>, 5> pq{
        {{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, -1}}};
    double smallest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pq.size(); ++i) {
        const double v = moser_divisor(freqs, pq[i][0], pq[i][1]);
        report.divisors[i] = {pq[i][0], pq[i][1], v};
        smallest = std::min(smallest, std::abs(v));
    }
    report.smallest_divisor_abs = smallest;
    report.resonant =
        std::abs(report.min_combination.value) < kResonantCombinationTol;
    return report;
}

} // namespace tristab
