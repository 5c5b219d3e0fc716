#pragma once

#include <string>
#include <vector>

#include "tristab/io.hpp"
#include "tristab/params.hpp"

namespace tristab {

/// Resonance and determinant-degeneracy boundaries against the radiation
/// factor, q1 in {0.95 .. 1.00} at A2 = 0, drag active through cd.
/// Columns: q1, mu_c1, mu_c2, mu_c3.
Table table1(double cd = kDefaultLightSpeed);

/// The same boundaries against oblateness, A2 in {0.0 .. 0.7} at q1 = 1
/// (so the drag strength vanishes). Columns: a2, mu_c1, mu_c2, mu_c3.
Table table2();

/// One sweep axis over a named parameter.
struct SweepAxis {
    std::string name; ///< one of "mu", "q1", "a2"
    double min = 0.0;
    double max = 0.0;
    int count = 0;    ///< at least 2, endpoints included
};

/// A one- or two-axis grid; parameters not swept keep the fixed values.
struct SweepSpec {
    std::vector<SweepAxis> axes;
    double mu = 0.01;
    double q1 = 1.0;
    double a2 = 0.0;
    double cd = kDefaultLightSpeed;
    double tol = 1e-6;
};

/// Evaluates the four critical-mass curves and the classification verdict
/// over the grid. Columns: the axis parameters in order, then mu_c0,
/// mu_c1, mu_c2, mu_c3 and the numeric verdict code (0 kam-stable,
/// 1 linearly-unstable, 2 resonance-excluded, 3 degenerate-D). Rows are
/// emitted with the first axis outermost.
Table region_sweep(const SweepSpec& spec);

/// Machine-readable list of every defect found in the source derivation
/// while building this library, with the adopted resolution for each.
/// Entries carry a verbatim anchor fragment so they can be located without
/// page or equation references. Serialized as a JSON document that
/// round-trips byte-identically through parse and re-serialize.
std::string errata_json();

} // namespace tristab
