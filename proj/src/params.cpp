#include "tristab/params.hpp"

#include <cmath>
#include <string>

#include "tristab/errors.hpp"

namespace tristab {

SystemParams derive_params(double mu, double q1, double a2, double cd) {
    if (!std::isfinite(mu) || !std::isfinite(q1) || !std::isfinite(a2) ||
        !std::isfinite(cd)) {
        throw DomainError("parameters must be finite");
    }
    if (!(mu > 0.0) || !(mu <= 0.5)) {
        throw DomainError("mu must lie in (0, 0.5], got " + std::to_string(mu));
    }
    if (!(q1 > 0.0) || q1 > 1.0) {
        throw DomainError("q1 must lie in (0, 1], got " + std::to_string(q1));
    }
    if (a2 < 0.0) {
        throw DomainError("a2 must be >= 0, got " + std::to_string(a2));
    }
    if (!(cd > 0.0)) {
        throw DomainError("cd must be > 0, got " + std::to_string(cd));
    }

    SystemParams p{};
    p.mu = mu;
    p.q1 = q1;
    p.a2 = a2;
    p.cd = cd;
    p.eps = 1.0 - q1;
    p.w1 = (1.0 - mu) * (1.0 - q1) / cd;
    p.n = std::sqrt(1.0 + 1.5 * a2);
    p.gamma = 1.0 - 2.0 * mu;
    p.delta = std::cbrt(q1);
    return p;
}

} // namespace tristab
