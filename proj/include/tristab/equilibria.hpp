#pragma once

#include "tristab/params.hpp"

namespace tristab {

/// Which triangular point: L4 sits at +y, L5 at -y.
enum class Branch { L4, L5 };

/// Which formula produced a point.
enum class PointFormula { Full, Series, Classical };

/// A triangular equilibrium point in the rotating frame.
/// L5 coordinates equal the L4 ones with y negated and x unchanged.
struct EquilibriumPoint {
    double x;
    double y;
    Branch branch;
    PointFormula formula;
};

/// L4/L5 coordinates from the first-order-perturbed closed forms.
///
/// The abscissa uses the multiplied-through equivalent of the printed
/// braced form (the x0 factors cancel in the drag and oblateness shifts,
/// so the expression stays regular where x0 = 0). The ordinate keeps the
/// square root unexpanded; the difference from the expanded variant is
/// below first order. Reduces exactly to (x0, y0) when a2 = w1 = 0.
///
/// Throws DegeneratePointError when the factor under the ordinate's square
/// root is negative (parameters outside the formula's validity).
EquilibriumPoint triangular_point_full(const SystemParams& p,
                                       Branch branch = Branch::L4);

/// L4 coordinates in the expansion through first order in (eps, a2, w1),
/// together with the origin-shift quantities a = x + mu and b = y.
struct SeriesPoint {
    double x;
    double y;
    double a;
    double b;
    bool eps_warning; ///< set when eps exceeds 0.1, past the expansion's comfort zone
};

SeriesPoint series_point_L4(const SystemParams& p);

/// The unperturbed-in-(a2, w1) point (x0, y0): exact equilibrium whenever
/// a2 = 0 and w1 = 0, for any q1.
EquilibriumPoint classical_point(const SystemParams& p,
                                 Branch branch = Branch::L4);

/// Right-hand side of the equations of motion evaluated at rest at the
/// point (both components). A true equilibrium returns (0, 0).
struct Residual {
    double rx;
    double ry;
    double norm() const;
};

Residual equilibrium_residual(const EquilibriumPoint& pt,
                              const SystemParams& p);

} // namespace tristab
