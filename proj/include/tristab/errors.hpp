#pragma once

#include <stdexcept>
#include <string>

namespace tristab {

/// Invalid physical parameters or a request outside a formula's validity range.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A denominator factor vanished (or came within tolerance of zero).
/// `factor` names the offending expression, e.g. "(-1+2*omega1^2)".
class SingularFactorError : public std::runtime_error {
public:
    explicit SingularFactorError(std::string factor_expr, double value)
        : std::runtime_error("singular denominator factor " + factor_expr +
                             " = " + std::to_string(value)),
          factor(std::move(factor_expr)) {}

    std::string factor;
};

/// The configuration is outside the linear-stability region (complex or
/// non-positive squared frequencies).
class InstabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The bracketed factor under the square root of the equilibrium ordinate
/// is negative: the first-order point formula is invalid at these parameters.
class DegeneratePointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// linearize() was handed a point whose equations-of-motion residual exceeds
/// the equilibrium gate.
class NonEquilibriumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A trajectory (or point evaluation) came too close to one of the primaries.
class CollisionError : public std::runtime_error {
public:
    explicit CollisionError(std::string radius_name, double value)
        : std::runtime_error("collision: " + radius_name + " = " +
                             std::to_string(value)),
          factor(std::move(radius_name)) {}

    std::string factor;
};

/// The adaptive integrator's step size underflowed.
class StepUnderflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A perturbed resonance quadratic has no real root.
class NoRealRootError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tristab
