#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tristab/equilibria.hpp"
#include "tristab/params.hpp"

namespace tristab {

/// Trajectories raise CollisionError when either primary distance drops
/// to this radius or below.
inline constexpr double kCollisionRadius = 1e-12;

/// Planar rotating-frame state.
struct PhaseState {
    double x;
    double y;
    double vx;
    double vy;
    double t = 0.0;
};

/// Effective potential
///   U1 = n^2 (x^2+y^2)/2 + (1-mu) q1 / r1 + mu / r2 + mu a2 / (2 r2^3)
/// with r1 the distance to the radiating primary at (-mu, 0) and r2 the
/// distance to the oblate secondary at (1-mu, 0).
double effective_potential(const SystemParams& p, double x, double y);

/// Analytic gradient (dU1/dx, dU1/dy).
std::pair<double, double> potential_gradient(const SystemParams& p,
                                             double x, double y);

/// Accelerations of the full flow:
///   ax = 2 n vy + dU1/dx - w1 n1 / r1^2
///   ay = -2 n vx + dU1/dy - w1 n2 / r1^2
/// where n1 = (x+mu) rdot/r1 + vx - n y and n2 = y rdot/r1 + vy + n (x+mu)
/// carry the velocity-dependent drag (rdot r1 = (x+mu) vx + y vy).
///
/// Throws CollisionError when r1 or r2 <= kCollisionRadius.
std::pair<double, double> acceleration(const PhaseState& s,
                                       const SystemParams& p);

/// First integral of the drag-free flow: C = 2 U1 - (vx^2 + vy^2).
/// Exactly conserved only when w1 = 0; used as an integrator diagnostic.
double jacobi_constant(const PhaseState& s, const SystemParams& p);

enum class Method { FixedStepRK4, AdaptiveRK45 };

struct IntegrationOptions {
    Method method = Method::AdaptiveRK45;
    double t_final = 0.0;
    double step = 1e-2;    ///< fixed step (RK4) or initial step (RK45)
    double rtol = 1e-10;   ///< adaptive relative tolerance
    double atol = 1e-12;   ///< adaptive absolute tolerance
    int output_every = 1;  ///< record every k-th accepted step
};

/// Integrates the equations of motion from s0 for options.t_final time units.
/// The returned trajectory starts with s0 and always contains the final
/// state at exactly t0 + t_final. t_final = 0 yields just {s0}.
///
/// Throws DomainError for non-positive step/tolerances, CollisionError near
/// a primary, StepUnderflowError if the adaptive step dies away.
std::vector<PhaseState> integrate(const PhaseState& s0, const SystemParams& p,
                                  const IntegrationOptions& opts);

/// Variational data at an equilibrium: the 4x4 Jacobian of the first-order
/// system d/dt (x, y, vx, vy) and its eigenvalues.
struct Linearization {
    Eigen::Matrix4d jacobian;
    std::array<std::complex<double>, 4> eigenvalues;
};

/// Central finite-difference Jacobian (step 1e-7) of the analytic right-hand
/// side, eigenvalues via Eigen's QR-based solver.
///
/// Throws NonEquilibriumError when the point's residual norm exceeds 1e-6.
Linearization linearize(const EquilibriumPoint& pt, const SystemParams& p);

} // namespace tristab
