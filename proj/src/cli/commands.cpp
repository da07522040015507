#include "asymm_osc/cli.hpp"

#include "asymm_osc/classical.hpp"
#include "asymm_osc/errors.hpp"
#include "asymm_osc/observables.hpp"
#include "asymm_osc/spectrum.hpp"
#include "asymm_osc/wavefun.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace asymm_osc::cli {

namespace {

// Largest level index any command will try to solve for.
constexpr int kMaxLevel = 10000;

struct Flags {
    double s = 0.0;
    double omega_plus = 1.0;
    std::string convention;
    std::string format;
    std::string output;
    std::string config_path;
    double rel_tol = 0.0;
    double abs_tol = 0.0;
    int max_subdivisions = 0;
};

struct Params {
    int count = 0;
    int n = 0;
    int k = 0;
    int size = 0;
    int samples = 0;
    int steps = 0;
    double x_min = 0.0;
    double x_max = 0.0;
    double t_max = 0.0;
    double amplitude = 1.0;
};

OscillatorConfig oscillator(const RunConfig& rc) { return OscillatorConfig{*rc.s, rc.omega_plus}; }

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw UsageError(message);
    }
}

EigenRecord level(const OscillatorConfig& config, int n) {
    require(n >= 0, "--n must be >= 0");
    if (n > kMaxLevel) {
        throw RangeError("level " + std::to_string(n) + " exceeds the solver window (max " +
                         std::to_string(kMaxLevel) + ")");
    }
    EigenRecord rec = spectrum::solve_spectrum(config, n + 1).back();
    if (rec.nu_minus > specfun::kMaxOrder) {
        throw RangeError("level " + std::to_string(n) + " has nu_minus=" + std::to_string(rec.nu_minus) +
                         ", beyond the supported order " + std::to_string(specfun::kMaxOrder));
    }
    return rec;
}

Table cmd_spectrum(const RunConfig& rc, const Params& p) {
    require(p.count >= 1, "--count must be >= 1");
    require(p.count <= kMaxLevel, "--count must be <= " + std::to_string(kMaxLevel));
    Table t;
    t.columns = {"n", "nu_plus", "nu_minus", "energy", "glued"};
    for (const EigenRecord& r : spectrum::solve_spectrum(oscillator(rc), p.count)) {
        t.rows.push_back({double(r.n), r.nu_plus, r.nu_minus, r.energy, r.glued_hermite ? 1.0 : 0.0});
    }
    t.metadata = {{"count", double(p.count)}};
    return t;
}

Table cmd_wavefunction(const RunConfig& rc, const Params& p) {
    require(p.samples >= 2, "--samples must be >= 2");
    require(p.x_max > p.x_min, "--xmax must exceed --xmin");
    const OscillatorConfig config = oscillator(rc);
    const EigenRecord rec = level(config, p.n);
    const PiecewiseEigenfunction psi = wavefun::build_eigenfunction(config, rec, rc.convention, rc.quadrature);
    Table t;
    t.columns = {"x", "psi", "density"};
    for (const auto& d : wavefun::density_grid(psi, p.x_min, p.x_max, p.samples)) {
        t.rows.push_back({d.x, d.psi, d.density});
    }
    t.metadata = {
        {"n", double(rec.n)},
        {"nu_plus", rec.nu_plus},
        {"nu_minus", rec.nu_minus},
        {"energy", rec.energy},
        {"convention", std::string(to_string(rc.convention))},
        {"norm", psi.norm()},
        {"coeff_right", psi.coeff_right()},
        {"coeff_left", psi.coeff_left()},
        {"sign", double(psi.sign())},
    };
    return t;
}

Table cmd_xmatrix(const RunConfig& rc, const Params& p) {
    require(p.size >= 1, "--size must be >= 1");
    const OscillatorConfig config = oscillator(rc);
    level(config, p.size - 1); // range check on the highest level
    const auto basis = wavefun::build_basis(config, p.size, rc.convention, rc.quadrature);
    const auto m = observables::x_matrix(basis, rc.quadrature);
    Table t;
    t.columns = {"i"};
    for (int j = 0; j < p.size; ++j) {
        t.columns.push_back("j" + std::to_string(j));
    }
    for (int i = 0; i < p.size; ++i) {
        std::vector<std::optional<double>> row{double(i)};
        row.insert(row.end(), m[i].begin(), m[i].end());
        t.rows.push_back(std::move(row));
    }
    t.metadata = {{"size", double(p.size)}, {"convention", std::string(to_string(rc.convention))}};
    return t;
}

Table cmd_beats(const RunConfig& rc, const Params& p) {
    require(p.n != p.k, "--n and --k must differ");
    require(p.n >= 0 && p.k >= 0, "--n and --k must be >= 0");
    require(p.t_max > 0.0, "--t-max must be positive");
    require(p.steps >= 2, "--steps must be >= 2");
    const OscillatorConfig config = oscillator(rc);
    level(config, std::max(p.n, p.k)); // range check
    const auto records = spectrum::solve_spectrum(config, std::max(p.n, p.k) + 1);
    const BeatSignal b = observables::beat_signal(config, p.n, p.k, p.t_max, p.steps, rc.quadrature, rc.convention);
    Table t;
    t.columns = {"t", "mean_x"};
    for (const auto& smp : b.samples) {
        t.rows.push_back({smp.t, smp.value});
    }
    t.metadata = {
        {"n", double(p.n)},
        {"k", double(p.k)},
        {"nu_n", records[p.n].nu_plus},
        {"nu_k", records[p.k].nu_plus},
        {"center", b.center},
        {"amplitude", b.amplitude},
        {"frequency", b.frequency},
        {"convention", std::string(to_string(rc.convention))},
    };
    return t;
}

Table cmd_compare_density(const RunConfig& rc, const Params& p) {
    require(p.samples >= 2, "--samples must be >= 2");
    const OscillatorConfig config = oscillator(rc);
    const EigenRecord rec = level(config, p.n);
    const PiecewiseEigenfunction psi = wavefun::build_eigenfunction(config, rec, rc.convention, rc.quadrature);
    const ClassicalState cs = classical::match_energy(config, rec);
    const double lo = -1.15 * cs.amplitude_left;
    const double hi = 1.15 * cs.amplitude_right;
    Table t;
    t.columns = {"x", "quantum_density", "classical_density"};
    for (const auto& d : wavefun::density_grid(psi, lo, hi, p.samples)) {
        std::optional<double> cl;
        if (d.x > -cs.amplitude_left && d.x < cs.amplitude_right) {
            cl = classical::classical_density(cs, d.x);
        }
        t.rows.push_back({d.x, d.density, cl});
    }
    t.metadata = {
        {"n", double(rec.n)},
        {"nu_plus", rec.nu_plus},
        {"energy", rec.energy},
        {"amplitude_right", cs.amplitude_right},
        {"amplitude_left", cs.amplitude_left},
        {"period", cs.period},
        {"convention", std::string(to_string(rc.convention))},
    };
    return t;
}

Table cmd_trajectory(const RunConfig& rc, const Params& p) {
    require(p.amplitude > 0.0, "--amplitude must be positive");
    require(p.t_max > 0.0, "--t-max must be positive");
    require(p.steps >= 2, "--steps must be >= 2");
    const OscillatorConfig config = oscillator(rc);
    const ClassicalState cs = classical::make_state(config.omega_plus, config.omega_minus(), p.amplitude);
    Table t;
    t.columns = {"t", "x", "v"};
    for (int i = 0; i < p.steps; ++i) {
        const double time = (i == p.steps - 1) ? p.t_max : p.t_max * i / (p.steps - 1);
        const PhasePoint q = classical::trajectory(cs, time);
        t.rows.push_back({time, q.x, q.v});
    }
    t.metadata = {
        {"amplitude_right", cs.amplitude_right},
        {"amplitude_left", cs.amplitude_left},
        {"energy", cs.energy},
        {"period", cs.period},
    };
    return t;
}

RunConfig resolve(const CLI::App& app, const Flags& f) {
    RunConfig rc;
    std::string path = f.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("ASYMM_OSC_CONFIG"); env != nullptr && *env != '\0') {
            path = env;
        }
    }
    if (!path.empty()) {
        apply_config_file(path, rc);
    }
    const auto given = [&app](const char* name) { return app.get_option(name)->count() > 0; };
    if (given("--s")) {
        rc.s = f.s;
    }
    if (given("--omega-plus")) {
        rc.omega_plus = f.omega_plus;
    }
    if (given("--convention")) {
        rc.convention = *parse_convention(f.convention);
    }
    if (given("--format")) {
        rc.format = f.format == "json" ? OutputFormat::json : OutputFormat::csv;
    }
    if (given("--output")) {
        rc.output = f.output;
    }
    if (given("--rel-tol")) {
        rc.quadrature.rel_tol = f.rel_tol;
    }
    if (given("--abs-tol")) {
        rc.quadrature.abs_tol = f.abs_tol;
    }
    if (given("--max-subdivisions")) {
        rc.quadrature.max_subdivisions = f.max_subdivisions;
    }
    rc.validate();
    return rc;
}

void emit(const Table& table, const RunConfig& rc, const std::string& command, std::ostream& out) {
    std::ostringstream buffer;
    if (rc.format == OutputFormat::csv) {
        write_csv(table, buffer);
    } else {
        nlohmann::json config = rc.to_json();
        config["command"] = command;
        buffer << to_json(table, std::move(config)).dump(2) << '\n';
    }
    if (rc.output.empty()) {
        out << buffer.str();
        return;
    }
    std::ofstream file(rc.output, std::ios::binary);
    if (!(file << buffer.str())) {
        throw UsageError("cannot write output file '" + rc.output + "'");
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Asymmetric quantum harmonic oscillator: spectra, eigenfunctions and observables", "asymm-osc"};
    app.require_subcommand(1, 1);
    app.option_defaults()->always_capture_default();

    Flags f;
    app.add_option("--s", f.s, "frequency ratio omega_plus/omega_minus (>= 1)");
    app.add_option("--omega-plus", f.omega_plus, "right-hand frequency");
    app.add_option("--convention", f.convention, "wavefunction argument scale")
        ->check(CLI::IsMember({"eq6-scale", "sec4-scale"}));
    app.add_option("--format", f.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", f.output, "write to this file instead of standard output");
    app.add_option("--config", f.config_path, "key=value config file (default: $ASYMM_OSC_CONFIG)");
    app.add_option("--rel-tol", f.rel_tol, "quadrature relative tolerance");
    app.add_option("--abs-tol", f.abs_tol, "quadrature absolute tolerance");
    app.add_option("--max-subdivisions", f.max_subdivisions, "quadrature subdivision budget");

    Params p;
    using Handler = std::function<Table(const RunConfig&, const Params&)>;
    std::map<const CLI::App*, std::pair<std::string, Handler>> handlers;
    const auto command = [&](const std::string& name, const std::string& help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        handlers[sub] = {name, std::move(h)};
        return sub;
    };

    CLI::App* sp = command("spectrum", "lowest eigenvalues", cmd_spectrum);
    sp->add_option("--count", p.count, "number of levels")->required();

    CLI::App* wf = command("wavefunction", "normalized eigenfunction samples", cmd_wavefunction);
    wf->add_option("--n", p.n, "level index")->required();
    wf->add_option("--xmin", p.x_min)->required();
    wf->add_option("--xmax", p.x_max)->required();
    wf->add_option("--samples", p.samples)->required();

    CLI::App* xm = command("xmatrix", "position matrix elements", cmd_xmatrix);
    xm->add_option("--size", p.size, "matrix dimension")->required();

    CLI::App* bt = command("beats", "mean position of a two-level superposition", cmd_beats);
    bt->add_option("--n", p.n)->required();
    bt->add_option("--k", p.k)->required();
    bt->add_option("--t-max", p.t_max)->required();
    bt->add_option("--steps", p.steps)->required();

    CLI::App* cd = command("compare-density", "quantum vs classical probability density", cmd_compare_density);
    cd->add_option("--n", p.n)->required();
    cd->add_option("--samples", p.samples)->required();

    CLI::App* tr = command("trajectory", "classical orbit x(t), v(t)", cmd_trajectory);
    tr->add_option("--amplitude", p.amplitude, "right turning point A+");
    tr->add_option("--t-max", p.t_max)->required();
    tr->add_option("--steps", p.steps)->required();

    std::vector<const char*> argv{"asymm-osc"};
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    const auto& [name, handler] = handlers.at(chosen);
    try {
        const RunConfig rc = resolve(app, f);
        emit(handler(rc, p), rc, name, out);
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

} // namespace asymm_osc::cli
