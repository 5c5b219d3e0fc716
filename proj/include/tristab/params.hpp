#pragma once

namespace tristab {

/// Default dimensionless light-speed constant entering the drag strength W1.
inline constexpr double kDefaultLightSpeed = 299792458.0;

/// Physical parameter record for the planar restricted three-body problem
/// with a radiating primary (radiation factor q1, drag strength W1) and an
/// oblate secondary (oblateness coefficient A2).
///
/// Raw fields are the four inputs; the rest are derived once and cached.
/// Immutable by convention: treat instances as value types.
struct SystemParams {
    // raw
    double mu;    ///< mass ratio, 0 < mu <= 1/2
    double q1;    ///< mass-reduction factor, 0 < q1 <= 1
    double a2;    ///< oblateness coefficient, >= 0
    double cd;    ///< dimensionless light-speed constant, > 0

    // derived
    double eps;   ///< 1 - q1
    double w1;    ///< drag strength (1-mu)(1-q1)/cd
    double n;     ///< mean motion, n^2 = 1 + (3/2) a2
    double gamma; ///< 1 - 2 mu
    double delta; ///< q1^(1/3)
};

/// Validates raw inputs and populates every derived field.
///
/// Throws DomainError when mu is outside (0, 1/2], q1 is outside (0, 1],
/// a2 < 0, cd <= 0, or any input is non-finite.
SystemParams derive_params(double mu, double q1, double a2,
                           double cd = kDefaultLightSpeed);

} // namespace tristab
