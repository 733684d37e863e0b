// Command-line front end: spectra, oracle validation, parameter sweeps,
// sampled spinors and persistent-current reports for the Dirac oscillator
// with an Aharonov-Casher coupling on flat and conical backgrounds.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <locale>
#include <sstream>
#include <string>
#include <vector>

#include "diracac/config.hpp"
#include "diracac/currents.hpp"
#include "diracac/io.hpp"
#include "diracac/model.hpp"
#include "diracac/oracle.hpp"
#include "diracac/parallel.hpp"
#include "diracac/spectrum.hpp"
#include "diracac/spinor.hpp"

namespace {

using namespace diracac;

struct SharedOpts {
    std::string background = "minkowski";
    double eta = 1.0;
    double chi = 0.0;
    double mass = 1.0;
    double omega = 1.0;
    double mu_lambda = 0.0;
    double k = 0.0;
    int n_max = 0;
    int l = 0;
    int l_min = 0;
    int l_max = 0;
    std::string spin = "+1";
    std::string format = "csv";
    std::string out;
    std::string config;

    CLI::Option* o_background = nullptr;
    CLI::Option* o_eta = nullptr;
    CLI::Option* o_chi = nullptr;
    CLI::Option* o_mass = nullptr;
    CLI::Option* o_omega = nullptr;
    CLI::Option* o_mu_lambda = nullptr;
    CLI::Option* o_k = nullptr;
    CLI::Option* o_n_max = nullptr;
    CLI::Option* o_l = nullptr;
    CLI::Option* o_l_min = nullptr;
    CLI::Option* o_l_max = nullptr;
    CLI::Option* o_spin = nullptr;
    CLI::Option* o_format = nullptr;
    CLI::Option* o_out = nullptr;

    bool window_from_single_l = false;
};

void add_shared(CLI::App* cmd, SharedOpts& o) {
    o.o_background = cmd->add_option("--background", o.background,
                                     "minkowski|string|dislocation");
    o.o_eta = cmd->add_option("--eta", o.eta, "deficit-angle parameter, (0,1]");
    o.o_chi =
        cmd->add_option("--chi", o.chi, "torsion parameter (dislocation only)");
    o.o_mass = cmd->add_option("--mass", o.mass, "particle mass (> 0)");
    o.o_omega =
        cmd->add_option("--omega", o.omega, "oscillator frequency (> 0)");
    o.o_mu_lambda = cmd->add_option("--mu-lambda", o.mu_lambda,
                                    "dipole-line coupling (phase/2pi)");
    o.o_k = cmd->add_option("--k", o.k, "axial wavenumber");
    o.o_n_max = cmd->add_option("--n-max", o.n_max, "largest radial n");
    o.o_l = cmd->add_option("--l", o.l, "single orbital quantum number");
    o.o_l_min = cmd->add_option("--l-min", o.l_min, "lowest orbital l");
    o.o_l_max = cmd->add_option("--l-max", o.l_max, "highest orbital l");
    o.o_l->excludes(o.o_l_min);
    o.o_l->excludes(o.o_l_max);
    o.o_spin = cmd->add_option("--spin", o.spin, "+1|-1|both");
    o.o_format = cmd->add_option("--format", o.format, "csv|json");
    o.o_out = cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--config", o.config,
                    "key = value config file (flags take precedence)");
}

// Flags beat config-file keys beat the built-in defaults.
void merge_config(SharedOpts& o) {
    bool cfg_window = false;
    bool cfg_single = false;
    if (!o.config.empty()) {
        const ConfigMap kv = parse_config_file(o.config);
        auto sd = [&](CLI::Option* opt, double& field, const char* key) {
            if (opt->count() == 0) field = config_double(kv, key, field);
        };
        auto si = [&](CLI::Option* opt, int& field, const char* key) {
            if (opt->count() == 0) field = config_int(kv, key, field);
        };
        auto ss = [&](CLI::Option* opt, std::string& field, const char* key) {
            if (opt->count() == 0) field = config_string(kv, key, field);
        };
        ss(o.o_background, o.background, "background");
        sd(o.o_eta, o.eta, "eta");
        sd(o.o_chi, o.chi, "chi");
        sd(o.o_mass, o.mass, "mass");
        sd(o.o_omega, o.omega, "omega");
        sd(o.o_mu_lambda, o.mu_lambda, "mu_lambda");
        sd(o.o_k, o.k, "k");
        si(o.o_n_max, o.n_max, "n_max");
        si(o.o_l, o.l, "l");
        si(o.o_l_min, o.l_min, "l_min");
        si(o.o_l_max, o.l_max, "l_max");
        ss(o.o_spin, o.spin, "spin");
        ss(o.o_format, o.format, "format");
        ss(o.o_out, o.out, "out");
        cfg_window = kv.count("l_min") > 0 || kv.count("l_max") > 0;
        cfg_single = kv.count("l") > 0;
    }
    const bool cli_window = o.o_l_min->count() > 0 || o.o_l_max->count() > 0;
    const bool cli_single = o.o_l->count() > 0;
    o.window_from_single_l =
        cli_single || (!cli_window && (cfg_single || !cfg_window));
    if (o.window_from_single_l) {
        o.l_min = o.l;
        o.l_max = o.l;
    }
}

Background make_background(const SharedOpts& o) {
    Background bg;
    if (o.background == "minkowski")
        bg = Background::minkowski();
    else if (o.background == "string")
        bg = Background::cosmic_string(o.eta);
    else if (o.background == "dislocation")
        bg = Background::cosmic_dislocation(o.eta, o.chi);
    else
        throw std::invalid_argument("unknown background: " + o.background);
    if (bg.kind != BackgroundKind::CosmicDislocation && o.o_chi != nullptr &&
        o.o_chi->count() > 0 && o.chi != 0.0)
        throw std::invalid_argument(
            "chi only valid for the dislocation background");
    validate_background(bg);
    return bg;
}

PhysicalParams make_params(const SharedOpts& o) {
    PhysicalParams p{o.mass, o.omega, o.mu_lambda, o.k};
    validate_params(p);
    return p;
}

std::vector<int> make_spins(const std::string& spin) {
    if (spin == "+1" || spin == "1") return {+1};
    if (spin == "-1") return {-1};
    if (spin == "both") return {+1, -1};
    throw std::invalid_argument("spin must be +1, -1 or both");
}

void check_format(const std::string& format) {
    if (format != "csv" && format != "json")
        throw std::invalid_argument("format must be csv or json");
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    fn(os);
}

int run_spectrum(SharedOpts& o) {
    merge_config(o);
    check_format(o.format);
    const Background bg = make_background(o);
    const PhysicalParams params = make_params(o);
    const std::vector<int> spins = make_spins(o.spin);
    const LevelTable table =
        enumerate_levels(bg, params, o.n_max, o.l_min, o.l_max, spins);
    with_output(o.out, [&](std::ostream& os) {
        if (o.format == "csv")
            write_level_table_csv(os, table);
        else
            write_level_table_json(os, table);
    });
    return 0;
}

struct ValidateOpts {
    int count = 4;
    int points = 2048;
    bool corrupt_bracket = false;
};

int run_validate(SharedOpts& o, const ValidateOpts& v) {
    merge_config(o);
    if (v.count < 1) throw std::invalid_argument("count must be >= 1");
    const std::vector<ValidationPoint> points =
        run_validation_lattice(v.count, v.points, v.corrupt_bracket);
    if (!o.out.empty())
        with_output(o.out, [&](std::ostream& os) {
            write_validation_report_json(os, points);
        });

    double max_rel = 0.0;
    const ValidationPoint* first_fail = nullptr;
    for (const ValidationPoint& p : points) {
        max_rel = std::max(max_rel, p.rel_err);
        if (!p.pass && first_fail == nullptr) first_fail = &p;
    }
    std::cout << "validate: " << points.size()
              << " lattice points, max relative error = "
              << format_double(max_rel) << "\n";
    if (first_fail != nullptr) {
        std::cerr << "validate: FAIL at zeta/eta="
                  << format_double(first_fail->zeta_over_eta)
                  << " m_omega=" << format_double(first_fail->m_omega)
                  << " j=" << first_fail->j
                  << " rel_err=" << format_double(first_fail->rel_err)
                  << " tol=" << format_double(first_fail->tol) << "\n";
        return 1;
    }
    return 0;
}

struct SweepOpts {
    std::string var;
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
};

int run_sweep(SharedOpts& o, const SweepOpts& s) {
    merge_config(o);
    if (s.steps < 2) throw std::invalid_argument("steps must be >= 2");
    std::string var = s.var;
    for (char& c : var)
        if (c == '-') c = '_';
    if (var != "mu_lambda" && var != "eta" && var != "chi" && var != "k")
        throw std::invalid_argument("sweep variable must be one of "
                                    "mu_lambda|eta|chi|k");

    const Background bg = make_background(o);
    const PhysicalParams params = make_params(o);
    const std::vector<int> spins = make_spins(o.spin);

    if (var == "eta") {
        if (bg.kind == BackgroundKind::Minkowski)
            throw std::invalid_argument(
                "eta sweep requires a string or dislocation background");
        if (!(s.from > 0.0) || s.from > 1.0 || !(s.to > 0.0) || s.to > 1.0)
            throw std::invalid_argument(
                "sweep range invalid: eta must stay in (0,1]");
    }
    if (var == "chi" && bg.kind != BackgroundKind::CosmicDislocation)
        throw std::invalid_argument(
            "chi only valid for the dislocation background");

    std::vector<double> values(s.steps);
    for (int i = 0; i < s.steps; ++i)
        values[i] = (i == s.steps - 1)
                        ? s.to
                        : s.from + i * (s.to - s.from) / (s.steps - 1);

    std::vector<std::string> blocks(values.size());
    parallel_for(values.size(), [&](std::size_t vi) {
        Background bgv = bg;
        PhysicalParams pv = params;
        if (var == "mu_lambda") pv.mu_lambda = values[vi];
        else if (var == "eta") bgv.eta = values[vi];
        else if (var == "chi") bgv.chi = values[vi];
        else pv.k = values[vi];
        validate_background(bgv);

        std::ostringstream os;
        for (int n = 0; n <= o.n_max; ++n)
            for (int l = o.l_min; l <= o.l_max; ++l)
                for (int spin : spins) {
                    const EnergyLevel lvl =
                        energy_level(bgv, pv, {n, l, spin});
                    os << format_double(values[vi]) << ',' << n << ',' << l
                       << ',' << spin << ',' << format_double(lvl.zeta) << ','
                       << format_double(lvl.energy) << ',';
                    if (std::fabs(lvl.zeta) > 1e-12)
                        os << format_double(
                            level_current(bgv, pv, {n, l, spin}));
                    os << '\n';
                }
        blocks[vi] = os.str();
    });

    with_output(o.out, [&](std::ostream& os) {
        os << var << ",n,l,s,zeta,energy,current\n";
        for (const std::string& block : blocks) os << block;
    });
    return 0;
}

struct SpinorOpts {
    int n = 0;
    int points = 2048;
    double rho_max = 0.0;  // 0 = derive from m*omega
    double at_t = 0.0;
    double at_phi = 0.0;
    double at_z = 0.0;
};

int run_spinor(SharedOpts& o, const SpinorOpts& sp) {
    merge_config(o);
    const Background bg = make_background(o);
    const PhysicalParams params = make_params(o);
    const std::vector<int> spins = make_spins(o.spin);
    if (spins.size() != 1)
        throw std::invalid_argument("spinor needs a single spin, not 'both'");
    const QuantumNumbers qn{sp.n, o.l_min, spins[0]};
    validate_quantum_numbers(qn);

    RadialGrid grid{sp.rho_max, sp.points};
    if (grid.rho_max <= 0.0)
        grid = default_grid(params.mass * params.omega, sp.points);

    SpinorField field = normalize(
        build_spinor(bg, params, qn, grid, {sp.at_t, sp.at_phi, sp.at_z}));
    const double residual = dirac_residual(field, bg, params);
    const double tol =
        std::fabs(field.zeta / bg.eta) < 0.5 ? 1e-6 : 1e-8;

    with_output(o.out, [&](std::ostream& os) { write_spinor_csv(os, field); });
    std::ostream& meta = o.out.empty() ? std::cerr : std::cout;
    meta << spinor_header_json(field, residual) << "\n";
    meta << "residual = " << format_double(residual)
         << (residual <= tol ? " (below gate " : " (ABOVE gate ")
         << format_double(tol) << ")\n";
    return residual <= tol ? 0 : 1;
}

int run_current(SharedOpts& o) {
    merge_config(o);
    const Background bg = make_background(o);
    const PhysicalParams params = make_params(o);
    const std::vector<int> spins = make_spins(o.spin);
    std::vector<QuantumNumbers> set;
    for (int n = 0; n <= o.n_max; ++n)
        for (int l = o.l_min; l <= o.l_max; ++l)
            for (int spin : spins) set.push_back({n, l, spin});
    const CurrentReport report = total_current(bg, params, std::move(set));
    with_output(o.out, [&](std::ostream& os) {
        write_current_report_json(os, bg, params, report);
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::locale::global(std::locale::classic());

    CLI::App app{
        "diracac: bound-state spectra, spinors and persistent spin currents "
        "of a Dirac oscillator with an Aharonov-Casher coupling on flat, "
        "cosmic-string and cosmic-dislocation backgrounds"};
    app.require_subcommand(1);

    SharedOpts spectrum_opts, validate_opts_shared, sweep_opts_shared,
        spinor_opts_shared, current_opts_shared;
    ValidateOpts validate_opts;
    SweepOpts sweep_opts;
    SpinorOpts spinor_opts;

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "enumerate bound-state energy levels");
    add_shared(spectrum, spectrum_opts);

    CLI::App* validate = app.add_subcommand(
        "validate",
        "cross-check the closed-form radial eigenvalues against the "
        "finite-difference eigensolver");
    add_shared(validate, validate_opts_shared);
    validate->add_option("--count", validate_opts.count,
                         "eigenvalues per lattice point");
    validate->add_option("--points", validate_opts.points,
                         "coarse grid size (fine grid doubles it)");
    validate->add_flag("--corrupt-bracket", validate_opts.corrupt_bracket,
                       "self-test hook: corrupt the analytic formula");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "sweep one parameter and tabulate levels and currents");
    add_shared(sweep, sweep_opts_shared);
    sweep->add_option("--sweep", sweep_opts.var, "mu-lambda|eta|chi|k")
        ->required();
    sweep->add_option("--from", sweep_opts.from, "first value")->required();
    sweep->add_option("--to", sweep_opts.to, "last value")->required();
    sweep->add_option("--steps", sweep_opts.steps, "number of values (>= 2)")
        ->required();

    CLI::App* spinor = app.add_subcommand(
        "spinor", "sample a normalized positive-energy spinor");
    add_shared(spinor, spinor_opts_shared);
    spinor->add_option("--n", spinor_opts.n, "radial quantum number");
    spinor->add_option("--points", spinor_opts.points, "grid nodes");
    spinor->add_option("--rho-max", spinor_opts.rho_max,
                       "truncation radius (default 10/sqrt(m*omega))");
    spinor->add_option("--at-t", spinor_opts.at_t, "phase evaluation time");
    spinor->add_option("--at-phi", spinor_opts.at_phi,
                       "phase evaluation angle");
    spinor->add_option("--at-z", spinor_opts.at_z, "phase evaluation height");

    CLI::App* current = app.add_subcommand(
        "current", "persistent spin currents over a level window");
    add_shared(current, current_opts_shared);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(spectrum_opts);
        if (validate->parsed())
            return run_validate(validate_opts_shared, validate_opts);
        if (sweep->parsed()) return run_sweep(sweep_opts_shared, sweep_opts);
        if (spinor->parsed())
            return run_spinor(spinor_opts_shared, spinor_opts);
        if (current->parsed()) return run_current(current_opts_shared);
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
