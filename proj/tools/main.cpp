#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tristab/dynamics.hpp"
#include "tristab/equilibria.hpp"
#include "tristab/errors.hpp"
#include "tristab/io.hpp"
#include "tristab/kam.hpp"
#include "tristab/linear_stability.hpp"
#include "tristab/normal_form.hpp"
#include "tristab/params.hpp"
#include "tristab/report.hpp"

namespace {

using namespace tristab;

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw DomainError("cannot parse " + what + " value '" + text + "'");
    }
    if (used != text.size()) {
        throw DomainError("trailing characters in " + what + " value '" +
                          text + "'");
    }
    return v;
}

/// key=value file with the four physical parameters; '#' starts a comment.
std::map<std::string, double> read_config(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw DomainError("cannot open config file: " + path);
    }
    std::map<std::string, double> values;
    std::string line;
    int line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw DomainError("config line " + std::to_string(line_no) +
                              " is not key=value: " + stripped);
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key != "mu" && key != "q1" && key != "a2" && key != "cd") {
            throw DomainError("unknown config key '" + key +
                              "' (allowed: mu, q1, a2, cd)");
        }
        values[key] = parse_double(value, "config key " + key);
    }
    return values;
}

/// Everything the subcommands share, after merging flags over the config
/// file (explicit flags win).
struct CommonArgs {
    double mu = 0.0;
    bool mu_given = false;
    double q1 = 1.0;
    double a2 = 0.0;
    double cd = kDefaultLightSpeed;
    double tol = 1e-6;
    OutputFormat format = OutputFormat::Csv;
    bool format_given = false;
    std::string out_path;
};

double require_mu(const CommonArgs& args) {
    if (!args.mu_given) {
        throw DomainError("this command needs --mu (or mu= in --config)");
    }
    return args.mu;
}

void emit(const Table& table, const CommonArgs& args) {
    write_output(serialize(table, args.format), args.out_path);
}

void emit_json_document(const std::string& content, const CommonArgs& args,
                        const char* command) {
    if (args.format_given && args.format == OutputFormat::Csv) {
        throw DomainError(std::string(command) + " emits JSON only");
    }
    write_output(content, args.out_path);
}

Cell flag_cell(bool b) { return Cell::number(b ? 1.0 : 0.0); }

// ---------------------------------------------------------------- eq-point

void run_eq_point(const CommonArgs& args, const std::string& formula,
                  const std::string& branch_name) {
    const SystemParams p = derive_params(require_mu(args), args.q1, args.a2,
                                         args.cd);
    Branch branch;
    if (branch_name == "L4") branch = Branch::L4;
    else if (branch_name == "L5") branch = Branch::L5;
    else throw DomainError("unknown branch '" + branch_name +
                           "' (expected L4 or L5)");

    Table t;
    if (formula == "series") {
        const SeriesPoint sp = series_point_L4(p);
        const double y = branch == Branch::L4 ? sp.y : -sp.y;
        EquilibriumPoint pt{sp.x, y, branch, PointFormula::Series};
        const Residual r = equilibrium_residual(pt, p);
        t.columns = {"x", "y", "residual_norm", "a", "b", "eps_warning"};
        t.rows.push_back({Cell::number(pt.x), Cell::number(pt.y),
                          Cell::number(r.norm()), Cell::number(sp.a),
                          Cell::number(sp.b), flag_cell(sp.eps_warning)});
    } else if (formula == "full" || formula == "classical") {
        const EquilibriumPoint pt = formula == "full"
                                        ? triangular_point_full(p, branch)
                                        : classical_point(p, branch);
        const Residual r = equilibrium_residual(pt, p);
        t.columns = {"x", "y", "residual_norm"};
        t.rows.push_back({Cell::number(pt.x), Cell::number(pt.y),
                          Cell::number(r.norm())});
    } else {
        throw DomainError("unknown formula '" + formula +
                          "' (expected full, series or classical)");
    }
    emit(t, args);
}

// ------------------------------------------------------------- frequencies

void run_frequencies(const CommonArgs& args) {
    const SystemParams p = derive_params(require_mu(args), args.q1, args.a2,
                                         args.cd);
    const FrequencyPair fr = frequencies(p);
    Table t;
    t.columns = {"omega1", "omega2",     "u",
                 "d_char", "boundary",   "resonance_2_1",
                 "resonance_3_1"};
    t.rows.push_back({Cell::number(fr.omega1), Cell::number(fr.omega2),
                      Cell::number(fr.u),
                      Cell::number(stability_discriminant(p)),
                      flag_cell(fr.boundary), flag_cell(fr.resonance_2_1),
                      flag_cell(fr.resonance_3_1)});
    emit(t, args);
}

// ------------------------------------------------------------------ mu-c0

void run_mu_c0(const CommonArgs& args) {
    if (!(args.q1 > 0.0 && args.q1 <= 1.0)) {
        throw DomainError("q1 must lie in (0, 1]");
    }
    if (!(args.cd > 0.0)) {
        throw DomainError("cd must be positive");
    }
    const double eps = 1.0 - args.q1;
    const double w1 = (1.0 - kClassicalMuC0) * eps / args.cd;
    Table t;
    t.columns = {"eps", "a2", "w1", "mu_c0"};
    t.rows.push_back({Cell::number(eps), Cell::number(args.a2),
                      Cell::number(w1),
                      Cell::number(mu_c0(eps, args.a2, w1))});
    emit(t, args);
}

// ------------------------------------------------------------- normal-form

void append_table(std::ostringstream& os, const char* name,
                  const std::array<double, 7>& values) {
    os << "    \"" << name << "\": [";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ", ";
        os << format_number(values[i]);
    }
    os << "]";
}

void run_normal_form(const CommonArgs& args) {
    const SystemParams p = derive_params(require_mu(args), args.q1, args.a2,
                                         args.cd);
    const FrequencyPair fr = frequencies(p);
    const NormalFormCoeffs nf = normal_form_abc(p, fr);
    const MoserReport moser = moser_divisor_check(fr);
    const KamDeterminantParts det = kam_determinant(p, fr);
    const double diag = kam_determinant_diagnostic(fr, nf);

    std::ostringstream os;
    os << "{\n";
    os << "  \"omega1\": " << format_number(fr.omega1) << ",\n";
    os << "  \"omega2\": " << format_number(fr.omega2) << ",\n";
    os << "  \"u\": " << format_number(fr.u) << ",\n";
    os << "  \"a\": " << format_number(nf.a) << ",\n";
    os << "  \"b\": " << format_number(nf.b) << ",\n";
    os << "  \"c\": " << format_number(nf.c) << ",\n";
    os << "  \"a_alternate\": " << format_number(nf.a_alternate) << ",\n";
    os << "  \"resonance_adjacent\": "
       << (nf.resonance_adjacent ? "true" : "false") << ",\n";
    os << "  \"tables\": {\n";
    append_table(os, "a1", nf.tables.a1);
    os << ",\n";
    append_table(os, "b1", nf.tables.b1);
    os << ",\n";
    append_table(os, "c1", nf.tables.c1);
    os << "\n  },\n";
    os << "  \"moser\": {\n";
    os << "    \"min_combination\": {\"k1\": " << moser.min_combination.k1
       << ", \"k2\": " << moser.min_combination.k2
       << ", \"value\": " << format_number(moser.min_combination.value)
       << "},\n";
    os << "    \"smallest_divisor_abs\": "
       << format_number(moser.smallest_divisor_abs) << ",\n";
    os << "    \"resonant\": " << (moser.resonant ? "true" : "false")
       << ",\n";
    os << "    \"divisors\": [";
    for (std::size_t i = 0; i < moser.divisors.size(); ++i) {
        const auto& d = moser.divisors[i];
        if (i) os << ", ";
        os << "{\"p\": " << d.p << ", \"q\": " << d.q
           << ", \"value\": " << format_number(d.value) << "}";
    }
    os << "]\n  },\n";
    os << "  \"diagnostic\": {\n";
    os << "    \"normal_form_d\": " << format_number(diag) << ",\n";
    os << "    \"closed_form_d\": " << format_number(det.total) << ",\n";
    os << "    \"difference\": " << format_number(diag - det.total)
       << "\n  }\n";
    os << "}\n";
    emit_json_document(os.str(), args, "normal-form");
}

// --------------------------------------------------------- critical-masses

void run_critical_masses(const CommonArgs& args) {
    const CriticalMassSet m = critical_masses(args.q1, args.a2, args.cd);
    Table t;
    t.columns = {"q1",    "a2",    "mu_c0", "c0_applicable",
                 "mu_c1", "c1_applicable", "mu_c2", "c2_applicable",
                 "mu_c3", "c3_applicable"};
    t.rows.push_back({Cell::number(args.q1), Cell::number(args.a2),
                      Cell::number(m.c0.value), flag_cell(m.c0.applicable),
                      Cell::number(m.c1.value), flag_cell(m.c1.applicable),
                      Cell::number(m.c2.value), flag_cell(m.c2.applicable),
                      Cell::number(m.c3.value), flag_cell(m.c3.applicable)});
    emit(t, args);
}

// ------------------------------------------------------------------- kam-d

void run_kam_d(const CommonArgs& args) {
    const SystemParams p = derive_params(require_mu(args), args.q1, args.a2,
                                         args.cd);
    const FrequencyPair fr = frequencies(p);
    const KamDeterminantParts parts = kam_determinant(p, fr);
    Table t;
    t.columns = {"u",  "d_classical", "d2", "d3", "d4",
                 "d5", "d6",          "d7", "total"};
    t.rows.push_back({Cell::number(parts.u),
                      Cell::number(parts.d_classical),
                      Cell::number(parts.expansion.d2),
                      Cell::number(parts.expansion.d3),
                      Cell::number(parts.expansion.d4),
                      Cell::number(parts.expansion.d5),
                      Cell::number(parts.expansion.d6),
                      Cell::number(parts.expansion.d7),
                      Cell::number(parts.total)});
    emit(t, args);
}

// ----------------------------------------------------------------- classify

void run_classify(const CommonArgs& args) {
    const double mu = require_mu(args);
    const Classification c = classify(mu, args.q1, args.a2, args.cd,
                                      args.tol);
    Table t;
    t.columns = {"mu", "q1", "a2", "verdict"};
    t.rows.push_back({Cell::number(mu), Cell::number(args.q1),
                      Cell::number(args.a2),
                      Cell::label(verdict_name(c.verdict))});
    emit(t, args);
}

// ---------------------------------------------------------------- integrate

struct IntegrateArgs {
    double x = 0.0;
    double y = 0.0;
    double vx = 0.0;
    double vy = 0.0;
    double t_final = 0.0;
    double step = 1e-2;
    double rtol = 1e-10;
    double atol = 1e-12;
    int every = 1;
    std::string method = "adaptive";
};

void run_integrate(const CommonArgs& args, const IntegrateArgs& ia) {
    const SystemParams p = derive_params(require_mu(args), args.q1, args.a2,
                                         args.cd);
    IntegrationOptions opts;
    if (ia.method == "adaptive") opts.method = Method::AdaptiveRK45;
    else if (ia.method == "fixed") opts.method = Method::FixedStepRK4;
    else throw DomainError("unknown method '" + ia.method +
                           "' (expected adaptive or fixed)");
    opts.t_final = ia.t_final;
    opts.step = ia.step;
    opts.rtol = ia.rtol;
    opts.atol = ia.atol;
    opts.output_every = ia.every;

    const PhaseState s0{ia.x, ia.y, ia.vx, ia.vy, 0.0};
    const std::vector<PhaseState> trajectory = integrate(s0, p, opts);

    Table t;
    t.columns = {"t", "x", "y", "vx", "vy", "jacobi"};
    t.rows.reserve(trajectory.size());
    for (const PhaseState& s : trajectory) {
        t.rows.push_back({Cell::number(s.t), Cell::number(s.x),
                          Cell::number(s.y), Cell::number(s.vx),
                          Cell::number(s.vy),
                          Cell::number(jacobi_constant(s, p))});
    }
    emit(t, args);
}

// ------------------------------------------------------------------- region

SweepAxis parse_axis(const std::string& text) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ':')) parts.push_back(token);
    if (parts.size() != 4) {
        throw DomainError("axis must be name:min:max:count, got '" + text +
                          "'");
    }
    SweepAxis axis;
    axis.name = trim(parts[0]);
    axis.min = parse_double(trim(parts[1]), "axis min");
    axis.max = parse_double(trim(parts[2]), "axis max");
    const double count = parse_double(trim(parts[3]), "axis count");
    axis.count = static_cast<int>(count);
    if (static_cast<double>(axis.count) != count) {
        throw DomainError("axis count must be an integer, got '" + parts[3] +
                          "'");
    }
    return axis;
}

void run_region(const CommonArgs& args,
                const std::vector<std::string>& axis_specs) {
    SweepSpec spec;
    for (const std::string& text : axis_specs) {
        spec.axes.push_back(parse_axis(text));
    }
    if (args.mu_given) spec.mu = args.mu;
    spec.q1 = args.q1;
    spec.a2 = args.a2;
    spec.cd = args.cd;
    spec.tol = args.tol;
    emit(region_sweep(spec), args);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Stability toolkit for the planar restricted three-body problem "
        "with a radiating primary, drag, and an oblate secondary"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string config_path;
    std::string format_name = "csv";

    auto* mu_opt =
        app.add_option("--mu", args.mu, "mass ratio of the smaller primary");
    auto* q1_opt =
        app.add_option("--q1", args.q1, "radiation factor in (0, 1]");
    auto* a2_opt =
        app.add_option("--a2", args.a2, "oblateness coefficient (>= 0)");
    auto* cd_opt = app.add_option(
        "--cd", args.cd, "drag divisor (dimensionless light speed)");
    auto* format_opt = app.add_option("--format", format_name,
                                      "output format: csv or json");
    app.add_option("--out", args.out_path,
                   "output file path (default: stdout)");
    app.add_option("--tol", args.tol,
                   "boundary-proximity tolerance for classification");
    app.add_option("--config", config_path,
                   "key=value file with mu, q1, a2, cd");

    std::string eq_formula = "full";
    std::string eq_branch = "L4";
    auto* eq_point = app.add_subcommand(
        "eq-point", "displaced triangular equilibrium coordinates");
    eq_point->add_option("--formula", eq_formula,
                         "full, series or classical");
    eq_point->add_option("--branch", eq_branch, "L4 or L5");

    auto* freq = app.add_subcommand(
        "frequencies", "long- and short-period frequencies");
    auto* muc0 = app.add_subcommand(
        "mu-c0", "linear stability boundary for given q1, a2, cd");
    auto* normal_form = app.add_subcommand(
        "normal-form",
        "fourth-order coefficients, divisor report and determinant "
        "diagnostic (JSON)");
    auto* critical = app.add_subcommand(
        "critical-masses", "all four stability boundaries");
    auto* kam_d = app.add_subcommand(
        "kam-d", "determinant of the nondegeneracy condition");
    auto* classify_cmd = app.add_subcommand(
        "classify", "nonlinear stability verdict for one configuration");

    IntegrateArgs ia;
    auto* integrate_cmd = app.add_subcommand(
        "integrate", "numerical trajectory of the equations of motion");
    integrate_cmd->add_option("--x", ia.x, "initial x")->required();
    integrate_cmd->add_option("--y", ia.y, "initial y")->required();
    integrate_cmd->add_option("--vx", ia.vx, "initial x velocity");
    integrate_cmd->add_option("--vy", ia.vy, "initial y velocity");
    integrate_cmd->add_option("--t-final", ia.t_final, "integration time");
    integrate_cmd->add_option("--step", ia.step,
                              "fixed step size (or initial adaptive step)");
    integrate_cmd->add_option("--rtol", ia.rtol, "relative tolerance");
    integrate_cmd->add_option("--atol", ia.atol, "absolute tolerance");
    integrate_cmd->add_option("--every", ia.every,
                              "record every k-th accepted step");
    integrate_cmd->add_option("--method", ia.method, "adaptive or fixed");

    auto* table1_cmd = app.add_subcommand(
        "table1", "boundaries against the radiation factor");
    auto* table2_cmd = app.add_subcommand(
        "table2", "boundaries against oblateness");

    std::vector<std::string> axis_specs;
    auto* region = app.add_subcommand(
        "region", "critical-mass curves and verdicts over a parameter grid");
    region->add_option("--axis", axis_specs,
                       "sweep axis as name:min:max:count (repeat for 2D)");

    auto* errata = app.add_subcommand(
        "errata", "defects found in the source derivation and adopted "
                  "readings (JSON)");

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) {
            const auto cfg = read_config(config_path);
            const auto merge = [&](const char* key, CLI::Option* opt,
                                   double* slot) {
                const auto it = cfg.find(key);
                if (it != cfg.end() && opt->count() == 0) *slot = it->second;
            };
            merge("mu", mu_opt, &args.mu);
            merge("q1", q1_opt, &args.q1);
            merge("a2", a2_opt, &args.a2);
            merge("cd", cd_opt, &args.cd);
            args.mu_given = mu_opt->count() > 0 || cfg.count("mu") > 0;
        } else {
            args.mu_given = mu_opt->count() > 0;
        }
        args.format_given = format_opt->count() > 0;
        args.format = parse_format(format_name);

        if (*eq_point) run_eq_point(args, eq_formula, eq_branch);
        else if (*freq) run_frequencies(args);
        else if (*muc0) run_mu_c0(args);
        else if (*normal_form) run_normal_form(args);
        else if (*critical) run_critical_masses(args);
        else if (*kam_d) run_kam_d(args);
        else if (*classify_cmd) run_classify(args);
        else if (*integrate_cmd) run_integrate(args, ia);
        else if (*table1_cmd) emit(table1(args.cd), args);
        else if (*table2_cmd) emit(table2(), args);
        else if (*region) run_region(args, axis_specs);
        else if (*errata)
            emit_json_document(errata_json(), args, "errata");
        return 0;
    } catch (const SingularFactorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CollisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const StepUnderflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
