#include "tristab/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "tristab/errors.hpp"

namespace tristab {

namespace {

struct PrimaryDistances {
    double r1sq, r2sq, r1, r2;
};

PrimaryDistances distances(const SystemParams& p, double x, double y) {
    const double dx1 = x + p.mu;
    const double dx2 = x + p.mu - 1.0;
    PrimaryDistances d{};
    d.r1sq = dx1 * dx1 + y * y;
    d.r2sq = dx2 * dx2 + y * y;
    d.r1 = std::sqrt(d.r1sq);
    d.r2 = std::sqrt(d.r2sq);
    return d;
}

void check_collision(const PrimaryDistances& d) {
    if (d.r1 <= kCollisionRadius) throw CollisionError("r1", d.r1);
    if (d.r2 <= kCollisionRadius) throw CollisionError("r2", d.r2);
}

using State4 = std::array<double, 4>;

State4 rhs(const SystemParams& p, const State4& s) {
    const PhaseState ps{s[0], s[1], s[2], s[3], 0.0};
    const auto [ax, ay] = acceleration(ps, p);
    return {s[2], s[3], ax, ay};
}

State4 axpy(const State4& a, double h, const State4& b) {
    return {a[0] + h * b[0], a[1] + h * b[1], a[2] + h * b[2], a[3] + h * b[3]};
}

State4 rk4_step(const SystemParams& p, const State4& s, double h) {
    const State4 k1 = rhs(p, s);
    const State4 k2 = rhs(p, axpy(s, h / 2.0, k1));
    const State4 k3 = rhs(p, axpy(s, h / 2.0, k2));
    const State4 k4 = rhs(p, axpy(s, h, k3));
    State4 out;
    for (int i = 0; i < 4; ++i) {
        out[i] = s[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

// Dormand-Prince 5(4) embedded pair.
struct Dopri5Result {
    State4 y5;
    double err; // scaled error norm; accept when <= 1
};

Dopri5Result dopri5_step(const SystemParams& p, const State4& s, double h,
                         double rtol, double atol) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                            c5 = 8.0 / 9;
    (void)c2; (void)c3; (void)c4; (void)c5; // autonomous system

    const State4 k1 = rhs(p, s);
    const State4 k2 = rhs(p, axpy(s, h * (1.0 / 5), k1));
    State4 tmp;
    for (int i = 0; i < 4; ++i)
        tmp[i] = s[i] + h * (3.0 / 40 * k1[i] + 9.0 / 40 * k2[i]);
    const State4 k3 = rhs(p, tmp);
    for (int i = 0; i < 4; ++i)
        tmp[i] = s[i] + h * (44.0 / 45 * k1[i] - 56.0 / 15 * k2[i] +
                             32.0 / 9 * k3[i]);
    const State4 k4 = rhs(p, tmp);
    for (int i = 0; i < 4; ++i)
        tmp[i] = s[i] + h * (19372.0 / 6561 * k1[i] - 25360.0 / 2187 * k2[i] +
                             64448.0 / 6561 * k3[i] - 212.0 / 729 * k4[i]);
    const State4 k5 = rhs(p, tmp);
    for (int i = 0; i < 4; ++i)
        tmp[i] = s[i] + h * (9017.0 / 3168 * k1[i] - 355.0 / 33 * k2[i] +
                             46732.0 / 5247 * k3[i] + 49.0 / 176 * k4[i] -
                             5103.0 / 18656 * k5[i]);
    const State4 k6 = rhs(p, tmp);

    State4 y5;
    for (int i = 0; i < 4; ++i)
        y5[i] = s[i] + h * (35.0 / 384 * k1[i] + 500.0 / 1113 * k3[i] +
                            125.0 / 192 * k4[i] - 2187.0 / 6784 * k5[i] +
                            11.0 / 84 * k6[i]);
    const State4 k7 = rhs(p, y5);

    // difference between the 5th- and embedded 4th-order solutions
    State4 e;
    for (int i = 0; i < 4; ++i)
        e[i] = h * (71.0 / 57600 * k1[i] - 71.0 / 16695 * k3[i] +
                    71.0 / 1920 * k4[i] - 17253.0 / 339200 * k5[i] +
                    22.0 / 525 * k6[i] - 1.0 / 40 * k7[i]);

    double err = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double scale =
            atol + rtol * std::max(std::abs(s[i]), std::abs(y5[i]));
        const double r = e[i] / scale;
        err += r * r;
    }
    return {y5, std::sqrt(err / 4.0)};
}

} // namespace

double effective_potential(const SystemParams& p, double x, double y) {
    const auto d = distances(p, x, y);
    check_collision(d);
    return p.n * p.n * (x * x + y * y) / 2.0 + (1.0 - p.mu) * p.q1 / d.r1 +
           p.mu / d.r2 + p.mu * p.a2 / (2.0 * d.r2 * d.r2sq);
}

std::pair<double, double> potential_gradient(const SystemParams& p, double x,
                                             double y) {
    const auto d = distances(p, x, y);
    check_collision(d);
    const double n2 = p.n * p.n;
    const double dx1 = x + p.mu;
    const double dx2 = x + p.mu - 1.0;
    const double inv_r1_3 = 1.0 / (d.r1sq * d.r1);
    const double inv_r2_3 = 1.0 / (d.r2sq * d.r2);
    const double inv_r2_5 = inv_r2_3 / d.r2sq;
    const double ux = n2 * x - (1.0 - p.mu) * p.q1 * dx1 * inv_r1_3 -
                      p.mu * dx2 * inv_r2_3 - 1.5 * p.mu * p.a2 * dx2 * inv_r2_5;
    const double uy = n2 * y - (1.0 - p.mu) * p.q1 * y * inv_r1_3 -
                      p.mu * y * inv_r2_3 - 1.5 * p.mu * p.a2 * y * inv_r2_5;
    return {ux, uy};
}

std::pair<double, double> acceleration(const PhaseState& s,
                                       const SystemParams& p) {
    const auto d = distances(p, s.x, s.y);
    check_collision(d);
    const auto [ux, uy] = potential_gradient(p, s.x, s.y);
    const double dx1 = s.x + p.mu;
    const double rdot_r1 = dx1 * s.vx + s.y * s.vy;
    const double n1 = dx1 * rdot_r1 / d.r1sq + s.vx - p.n * s.y;
    const double n2 = s.y * rdot_r1 / d.r1sq + s.vy + p.n * dx1;
    const double ax = 2.0 * p.n * s.vy + ux - p.w1 * n1 / d.r1sq;
    const double ay = -2.0 * p.n * s.vx + uy - p.w1 * n2 / d.r1sq;
    return {ax, ay};
}

double jacobi_constant(const PhaseState& s, const SystemParams& p) {
    return 2.0 * effective_potential(p, s.x, s.y) -
           (s.vx * s.vx + s.vy * s.vy);
}

std::vector<PhaseState> integrate(const PhaseState& s0, const SystemParams& p,
                                  const IntegrationOptions& opts) {
    if (opts.t_final < 0.0) throw DomainError("t_final must be >= 0");
    if (!(opts.step > 0.0)) throw DomainError("step must be > 0");
    if (opts.method == Method::AdaptiveRK45 &&
        (!(opts.rtol > 0.0) || !(opts.atol > 0.0))) {
        throw DomainError("adaptive tolerances must be > 0");
    }
    const int every = std::max(1, opts.output_every);

    std::vector<PhaseState> out;
    out.push_back(s0);
    if (opts.t_final == 0.0) return out;

    State4 y{s0.x, s0.y, s0.vx, s0.vy};
    double t = 0.0;
    const double t_end = opts.t_final;
    long accepted = 0;

    auto record = [&](double tcur, const State4& s, bool force) {
        if (force || accepted % every == 0) {
            out.push_back({s[0], s[1], s[2], s[3], s0.t + tcur});
        }
    };

    if (opts.method == Method::FixedStepRK4) {
        double h = opts.step;
        while (t < t_end) {
            const double hs = std::min(h, t_end - t);
            y = rk4_step(p, y, hs);
            t += hs;
            ++accepted;
            record(t, y, t >= t_end);
        }
        return out;
    }

    double h = std::min(opts.step, t_end);
    while (t < t_end) {
        h = std::min(h, t_end - t);
        if (h < 1e-14 * std::max(1.0, std::abs(t))) {
            throw StepUnderflowError("adaptive step underflow at t = " +
                                     std::to_string(t));
        }
        const auto r = dopri5_step(p, y, h, opts.rtol, opts.atol);
        if (r.err <= 1.0) {
            y = r.y5;
            t += h;
            ++accepted;
            record(t, y, t >= t_end);
        }
        const double safety =
            0.9 * std::pow(std::max(r.err, 1e-10), -0.2);
        h *= std::clamp(safety, 0.2, 5.0);
    }
    return out;
}

Linearization linearize(const EquilibriumPoint& pt, const SystemParams& p) {
    const Residual res = equilibrium_residual(pt, p);
    if (res.norm() > 1e-6) {
        throw NonEquilibriumError(
            "point residual norm " + std::to_string(res.norm()) +
            " exceeds the equilibrium gate 1e-6");
    }

    constexpr double h = 1e-7;
    const State4 base{pt.x, pt.y, 0.0, 0.0};
    Linearization lin;
    for (int j = 0; j < 4; ++j) {
        State4 plus = base, minus = base;
        plus[j] += h;
        minus[j] -= h;
        const State4 fp = rhs(p, plus);
        const State4 fm = rhs(p, minus);
        for (int i = 0; i < 4; ++i) {
            lin.jacobian(i, j) = (fp[i] - fm[i]) / (2.0 * h);
        }
    }

    const Eigen::EigenSolver<Eigen::Matrix4d> solver(lin.jacobian);
    for (int i = 0; i < 4; ++i) {
        lin.eigenvalues[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
    }
    return lin;
}

} // namespace tristab
