#include "sjj/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "output.hpp"
#include "sjj/eigensolve.hpp"
#include "sjj/errors.hpp"
#include "sjj/hartree.hpp"
#include "sjj/losses.hpp"
#include "sjj/meanfield.hpp"
#include "sjj/observables.hpp"
#include "sjj/parallel.hpp"
#include "sjj/physical.hpp"
#include "sjj/version.hpp"

namespace sjj::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Resolved-config echo: every data-affecting option, in declaration order.
struct Echo {
    std::vector<std::pair<std::string, std::function<json()>>> items;
    json dump() const {
        json j = json::object();
        for (const auto& [k, f] : items) j[k] = f();
        return j;
    }
};

std::string key_of(const std::string& names) {
    // first long name: "--eta-a,--x" -> "eta_a"
    auto pos = names.find("--");
    std::string k = names.substr(pos + 2, names.find(',', pos) - pos - 2);
    for (auto& ch : k)
        if (ch == '-') ch = '_';
    return k;
}

template <class T>
CLI::Option* add_bound(CLI::App* sub, Echo& echo, const std::string& names, T& var, const std::string& desc) {
    CLI::Option* opt = sub->add_option(names, var, desc)->capture_default_str();
    echo.items.emplace_back(key_of(names), [&var] { return json(var); });
    return opt;
}

// Options whose echo is null until given.
CLI::Option* add_optional(CLI::App* sub, Echo& echo, const std::string& names, double& var, const std::string& desc) {
    CLI::Option* opt = sub->add_option(names, var, desc);
    echo.items.emplace_back(key_of(names), [&var, opt]() -> json {
        if (opt->count() == 0) return nullptr;
        return std::stod(format_number(var));
    });
    return opt;
}

struct Common {
    std::string config;
    std::string output;
    std::string format;
    int threads = -1;
};

void add_common(CLI::App* sub, Common& c, Echo& echo, const std::string& default_format) {
    c.format = default_format;
    sub->add_option("--config", c.config, "JSON config file; keys are flag names with '-' replaced by '_'");
    sub->add_option("-o,--output", c.output, "output file (default: standard output)");
    add_bound(sub, echo, "--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", c.threads, "worker threads, 0 = all cores (fallback: SJJ_THREADS)");
}

unsigned resolve_thread_count(int flag) {
    if (flag >= 0) return static_cast<unsigned>(flag);
    if (const char* env = std::getenv("SJJ_THREADS"); env && *env) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 0) throw UsageError("SJJ_THREADS must be a non-negative integer, got '" + std::string(env) + "'");
        return static_cast<unsigned>(v);
    }
    return 0;
}

std::vector<double> parse_grid(const std::string& spec) {
    const auto a = spec.find(':');
    const auto b = spec.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos)
        throw UsageError("--grid expects start:stop:step, got '" + spec + "'");
    double start, stop, step;
    try {
        std::size_t used = 0;
        start = std::stod(spec.substr(0, a), &used);
        stop = std::stod(spec.substr(a + 1, b - a - 1));
        step = std::stod(spec.substr(b + 1));
    } catch (const std::exception&) {
        throw UsageError("--grid expects numbers in start:stop:step, got '" + spec + "'");
    }
    if (!(step > 0.0) || !std::isfinite(step)) throw UsageError("--grid step must be > 0");
    if (!(start <= stop)) throw UsageError("--grid start must not exceed stop");
    const double span = (stop - start) / step;
    if (span > 1e7) throw UsageError("--grid has too many points");
    const auto count = static_cast<long>(std::floor(span + 1e-9)) + 1;
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) g.push_back(start + step * static_cast<double>(i));
    return g;
}

std::vector<double> coupling_points(const CLI::Option* grid_opt, const std::string& grid, const CLI::Option* c_opt,
                                    double coupling) {
    if (grid_opt->count() > 0 && !grid.empty()) return parse_grid(grid);
    if (c_opt->count() > 0) return {coupling};
    throw UsageError("empty coupling grid: give --grid start:stop:step or --coupling");
}

void warn_nonphysical(const TwoModeParams& p, std::ostream& err) {
    if (is_nonphysical_soliton_limit(p))
        err << "warning: SJJ with coupling 0 has no bright-soliton realisation; computing the formal limit\n";
}

// ---- commands -----------------------------------------------------------

struct SpectrumCmd {
    std::string model = "sjj";
    int n = 300;
    std::string grid;
    double coupling = 0.0;
    CLI::Option* grid_opt = nullptr;
    CLI::Option* coupling_opt = nullptr;

    Document run(unsigned threads, std::ostream& err) const {
        const ModelKind kind = parse_model_kind(model);
        const auto pts = coupling_points(grid_opt, grid, coupling_opt, coupling);
        for (double c : pts) validate({kind, n, c});
        warn_nonphysical({kind, n, pts.front()}, err);
        const auto spectra = parallel_map<std::vector<double>>(
            pts.size(), threads, [&](std::size_t i) { return eigenvalues(build_hamiltonian({kind, n, pts[i]})); });
        Document d;
        d.columns = {"coupling", "k", "energy"};
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t k = 0; k < spectra[i].size(); ++k)
                d.rows.push_back({pts[i], static_cast<long long>(k), spectra[i][k]});
        return d;
    }
};

struct GroundCmd {
    std::string model = "sjj";
    int n = 300;
    double coupling = 0.0;

    Document run(std::ostream& err) const {
        const TwoModeParams p{parse_model_kind(model), n, coupling};
        warn_nonphysical(p, err);
        const auto g = ground_state(build_hamiltonian(p));
        Document d;
        d.columns = {"n", "prob", "amp"};
        for (int k = 0; k <= n; ++k) {
            const double a = g.state[static_cast<std::size_t>(k)].real();
            d.rows.push_back({static_cast<long long>(k), a * a, a});
        }
        return d;
    }
};

struct HzCmd {
    std::string model = "sjj";
    int n = 300;
    std::string grid;
    double coupling = 0.0;
    double refine_step = 1e-5;
    CLI::Option* grid_opt = nullptr;
    CLI::Option* coupling_opt = nullptr;

    Document run(unsigned threads, std::ostream& err) const {
        const ModelKind kind = parse_model_kind(model);
        const auto pts = coupling_points(grid_opt, grid, coupling_opt, coupling);
        for (double c : pts) validate({kind, n, c});
        warn_nonphysical({kind, n, pts.front()}, err);
        if (refine_step < 0.0) throw UsageError("--refine-step must be >= 0");
        const auto sweep = hz_sweep(kind, n, pts, threads, refine_step);
        Document d;
        d.columns = {"coupling", "hz1", "hzN", "delta_parallel", "j_parallel"};
        for (const auto& s : sweep) d.rows.push_back({s.coupling, s.hz1, s.hzn, s.delta_parallel, s.j_parallel});
        return d;
    }
};

struct MeanfieldCmd {
    double coupling = 0.0;
    double z0 = 0.0;
    double theta0 = 0.0;
    double tau_max = 100.0;
    double dtau = meanfield::kDefaultStep;
    int record_every = 100;

    Document run() const {
        if (!(coupling >= 0.0) || !std::isfinite(coupling)) throw DomainError("coupling must be finite and >= 0");
        const auto t = meanfield::integrate({z0, theta0}, coupling, tau_max, dtau, record_every);
        Document d;
        d.columns = {"tau", "z", "theta", "h", "drift"};
        const double h0 = t.energies.front();
        for (std::size_t i = 0; i < t.times.size(); ++i)
            d.rows.push_back({t.times[i], t.states[i].z, t.states[i].theta, t.energies[i], t.energies[i] - h0});
        return d;
    }
};

struct LossesCmd {
    std::string model = "sjj";
    int n = 300;
    double coupling = 0.0;
    std::string input = "ground";
    double satellite = 0.0;
    double eta_a = 0.999;
    double eta_b = 0.999;
    int la = -1;
    int lb = -1;
    double p_min = 0.0;

    FockState input_state(std::ostream& err) const {
        if (input == "ground") {
            const TwoModeParams p{parse_model_kind(model), n, coupling};
            warn_nonphysical(p, err);
            return ground_state(build_hamiltonian(p)).state;
        }
        validate(TwoModeParams{parse_model_kind(model), n, coupling});
        if (!(satellite >= 0.0) || !std::isfinite(satellite)) throw DomainError("satellite must be finite and >= 0");
        Amplitudes a(static_cast<std::size_t>(n) + 1);
        a.front() += 1.0;
        a.back() += 1.0;
        if (n >= 2) {
            a[1] += satellite;
            a[static_cast<std::size_t>(n) - 1] += satellite;
        }
        return FockState::normalized(std::move(a));
    }

    Document run(unsigned threads, std::ostream& err) const {
        const LossChannel ch{eta_a, eta_b};
        validate(ch);
        if ((la < 0) != (lb < 0)) throw UsageError("--la and --lb must be given together");
        const FockState s = input_state(err);
        Document d;
        if (la >= 0) {
            const auto c = conditional_state(s, la, lb, ch);
            d.columns = {"n", "prob"};
            for (int k = 0; k <= c.state.n_total(); ++k) {
                const double p = std::norm(c.state[static_cast<std::size_t>(k)]);
                if (p > 0.0) d.rows.push_back({static_cast<long long>(k), p});
            }
            d.config["branch_probability"] = std::stod(format_number(c.probability));
            return d;
        }
        if (!(p_min >= 0.0)) throw DomainError("p_min must be >= 0");
        d.columns = {"la", "lb", "n", "prob"};
        for (const auto& c : loss_mixture(s, ch, p_min, threads))
            for (int k = 0; k <= c.state.n_total(); ++k) {
                const double p = c.probability * std::norm(c.state[static_cast<std::size_t>(k)]);
                if (p > 0.0)
                    d.rows.push_back({static_cast<long long>(c.l_a), static_cast<long long>(c.l_b),
                                      static_cast<long long>(k), p});
            }
        return d;
    }
};

struct HartreeCmd {
    double coupling = 0.0;
    int n = 300;

    Document run() const {
        const auto sols = hartree::stationary_solutions(coupling);
        Document d;
        d.columns = {"branch", "s", "alpha", "beta", "theta", "energy", "energy_exact"};
        json branches = json::array();
        for (const auto& s : sols) {
            d.rows.push_back({std::string(hartree::to_string(s.branch)), s.s, s.alpha, s.beta, s.theta, s.energy,
                              s.energy_exact});
            json b;
            b["branch"] = hartree::to_string(s.branch);
            for (const auto& [k, v] : {std::pair{"s", s.s}, {"alpha", s.alpha}, {"beta", s.beta}, {"theta", s.theta},
                                       {"energy", s.energy}, {"energy_exact", s.energy_exact}})
                b[k] = std::stod(format_number(v));
            branches.push_back(std::move(b));
        }
        d.body["coupling"] = std::stod(format_number(coupling));
        d.body["branches"] = std::move(branches);
        if (coupling >= hartree::kBranchLower && coupling <= hartree::kBranchUpper && n >= 1)
            d.body["cat_overlap"] = std::stod(format_number(hartree::cat_overlap(coupling, n)));
        else
            d.body["cat_overlap"] = nullptr;
        return d;
    }
};

struct CrossoverCmd {
    std::string model = "sjj";
    int n = 300;
    std::string criterion = "bimodality";
    double lo = 0.0;
    double hi = 10.0;
    double tol = 1e-7;

    Document run() const {
        const ModelKind kind = parse_model_kind(model);
        const CrossoverCriterion crit = parse_crossover_criterion(criterion);
        const double c = crossover_coupling(kind, n, crit, lo, hi, tol);
        Document d;
        d.columns = {"model", "n", "criterion", "coupling"};
        d.rows.push_back({std::string(to_string(kind)), static_cast<long long>(n), criterion, c});
        d.body["coupling"] = std::stod(format_number(c));
        return d;
    }
};

struct PhysicalCmd {
    std::string species = "li7";
    double mass = 0.0;
    double a_sc = 0.0;
    double a_perp = 0.0;
    double omega_x = 0.0;
    double omega_perp = 0.0;
    double kappa_hz = 0.0;
    double tunnel_rate = 0.0;
    double n = 0.0;
    CLI::Option* mass_opt = nullptr;
    CLI::Option* a_perp_opt = nullptr;
    CLI::Option* kappa_hz_opt = nullptr;
    CLI::Option* tunnel_opt = nullptr;

    Document run() const {
        physical::TrapParams tp;
        tp.mass = mass_opt->count() ? mass : physical::species_mass(species);
        tp.a_sc = a_sc;
        tp.omega_x = omega_x;
        tp.omega_perp = omega_perp;
        tp.n_atoms = n;
        if (a_perp_opt->count()) tp.a_perp_override = a_perp;
        if (kappa_hz_opt->count() && tunnel_opt->count())
            throw UsageError("give either --kappa-hz or --tunnel-rate, not both");
        if (kappa_hz_opt->count())
            tp.tunnel_rate = 2.0 * std::numbers::pi * kappa_hz;
        else if (tunnel_opt->count())
            tp.tunnel_rate = tunnel_rate;
        else
            throw UsageError("one of --kappa-hz or --tunnel-rate is required");

        const double u = physical::nonlinearity_u(tp);
        std::vector<std::pair<std::string, double>> q{
            {"mass", tp.mass},
            {"a_perp", physical::a_perp(tp)},
            {"nu", physical::nu(tp)},
            {"u", u},
            {"uN", u * n},
            {"kappa", physical::kappa_dimensionless(tp)},
            {"lambda", physical::coupling_lambda(tp)},
            {"Lambda", physical::coupling_Lambda(tp)},
        };
        if (physical::nu(tp) > 0.0) q.emplace_back("wp", physical::wp_factor(tp));
        if (a_sc != 0.0) {
            const double nc = physical::critical_atom_number(tp);
            q.emplace_back("N_c", nc);
            q.emplace_back("uN_c", u * nc);
        }
        Document d;
        d.columns = {"quantity", "value"};
        json results = json::object();
        for (const auto& [k, v] : q) {
            d.rows.push_back({k, v});
            results[k] = std::stod(format_number(v));
        }
        d.body["results"] = std::move(results);
        return d;
    }
};

// Splices config-file values in front of the user's own tokens; with
// take-last semantics the command line wins.
std::vector<std::string> merge_config(const std::vector<std::string>& args, const std::vector<std::string>& commands) {
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
    }
    if (config_path.empty()) return args;

    std::ifstream f(config_path);
    if (!f) throw UsageError("cannot read config file '" + config_path + "'");
    json cfg;
    try {
        cfg = json::parse(f);
    } catch (const json::parse_error& e) {
        throw UsageError("config file '" + config_path + "' is not valid JSON: " + e.what());
    }
    if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");

    std::vector<std::string> injected;
    for (auto it = cfg.begin(); it != cfg.end(); ++it) {
        std::string flag = it.key();
        if (flag == "config") throw UsageError("config files cannot include other config files");
        for (auto& ch : flag)
            if (ch == '_') ch = '-';
        const json& v = it.value();
        std::string text;
        if (v.is_string())
            text = v.get<std::string>();
        else if (v.is_number() || v.is_boolean())
            text = v.dump();
        else
            throw UsageError("config key '" + it.key() + "' must be a string, number or boolean");
        injected.push_back("--" + flag);
        injected.push_back(text);
    }

    std::vector<std::string> out;
    bool spliced = false;
    for (const auto& a : args) {
        out.push_back(a);
        if (!spliced && std::find(commands.begin(), commands.end(), a) != commands.end()) {
            out.insert(out.end(), injected.begin(), injected.end());
            spliced = true;
        }
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum and mean-field analysis of soliton and bosonic Josephson junctions", "sjj"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    std::map<std::string, std::pair<Common, Echo>> state;
    auto sub = [&](const std::string& name, const std::string& desc, const std::string& fmt) {
        CLI::App* s = app.add_subcommand(name, desc);
        auto& [common, echo] = state[name];
        add_common(s, common, echo, fmt);
        return s;
    };
    auto model_check = CLI::IsMember({"sjj", "bjj", "SJJ", "BJJ"});

    SpectrumCmd spectrum;
    {
        auto* s = sub("spectrum", "all eigenvalues per coupling", "csv");
        auto& e = state["spectrum"].second;
        add_bound(s, e, "--model", spectrum.model, "sjj or bjj")->check(model_check);
        add_bound(s, e, "--n", spectrum.n, "total atom number N");
        spectrum.grid_opt = add_bound(s, e, "--grid", spectrum.grid, "coupling grid start:stop:step");
        spectrum.coupling_opt = add_optional(s, e, "--coupling,--lambda", spectrum.coupling, "single coupling");
    }
    GroundCmd ground;
    {
        auto* s = sub("ground", "ground-state distribution", "csv");
        auto& e = state["ground"].second;
        add_bound(s, e, "--model", ground.model, "sjj or bjj")->check(model_check);
        add_bound(s, e, "--n", ground.n, "total atom number N");
        add_bound(s, e, "--coupling,--lambda", ground.coupling, "coupling (Lambda or lambda)")->required();
    }
    HzCmd hz;
    {
        auto* s = sub("hz", "Hillery-Zubairy witnesses and planar squeezing of the ground state", "csv");
        auto& e = state["hz"].second;
        add_bound(s, e, "--model", hz.model, "sjj or bjj")->check(model_check);
        add_bound(s, e, "--n", hz.n, "total atom number N");
        hz.grid_opt = add_bound(s, e, "--grid", hz.grid, "coupling grid start:stop:step");
        hz.coupling_opt = add_optional(s, e, "--coupling,--lambda", hz.coupling, "single coupling");
        add_bound(s, e, "--refine-step", hz.refine_step, "refine around the hz1 minimum down to this step (0: off)");
    }
    MeanfieldCmd mf;
    {
        auto* s = sub("meanfield", "classical (z, theta) trajectory", "csv");
        auto& e = state["meanfield"].second;
        add_bound(s, e, "--coupling,--lambda", mf.coupling, "Lambda")->required();
        add_bound(s, e, "--z0", mf.z0, "initial imbalance");
        add_bound(s, e, "--theta0", mf.theta0, "initial phase");
        add_bound(s, e, "--tau-max", mf.tau_max, "final dimensionless time");
        add_bound(s, e, "--dtau", mf.dtau, "RK4 step");
        add_bound(s, e, "--record-every", mf.record_every, "keep every k-th step");
    }
    LossesCmd losses;
    {
        auto* s = sub("losses", "beam-splitter loss branches of a ground or N00N state", "csv");
        auto& e = state["losses"].second;
        add_bound(s, e, "--model", losses.model, "sjj or bjj")->check(model_check);
        add_bound(s, e, "--n", losses.n, "total atom number N");
        add_bound(s, e, "--coupling,--lambda", losses.coupling, "coupling for the ground-state input");
        add_bound(s, e, "--input", losses.input, "input state")->check(CLI::IsMember({"ground", "noon"}));
        add_bound(s, e, "--satellite", losses.satellite, "noon input: extra amplitude on n = 1 and N-1");
        add_bound(s, e, "--eta-a", losses.eta_a, "transmissivity of mode a");
        add_bound(s, e, "--eta-b", losses.eta_b, "transmissivity of mode b");
        add_bound(s, e, "--la", losses.la, "atoms lost from mode a (single branch)");
        add_bound(s, e, "--lb", losses.lb, "atoms lost from mode b (single branch)");
        add_bound(s, e, "--p-min", losses.p_min, "drop branches below this probability");
    }
    HartreeCmd hartree_cmd;
    {
        auto* s = sub("hartree", "stationary Hartree branches", "json");
        auto& e = state["hartree"].second;
        add_bound(s, e, "--coupling,--lambda", hartree_cmd.coupling, "Lambda")->required();
        add_bound(s, e, "--n", hartree_cmd.n, "atom number for the cat overlap");
    }
    CrossoverCmd crossover;
    {
        auto* s = sub("crossover", "crossover coupling by bisection", "json");
        auto& e = state["crossover"].second;
        add_bound(s, e, "--model", crossover.model, "sjj or bjj")->check(model_check);
        add_bound(s, e, "--n", crossover.n, "total atom number N");
        add_bound(s, e, "--criterion", crossover.criterion, "bimodality, edge or hz-jump")
            ->check(CLI::IsMember({"bimodality", "edge", "hz-jump"}));
        add_bound(s, e, "--lo", crossover.lo, "bracket start");
        add_bound(s, e, "--hi", crossover.hi, "bracket end");
        add_bound(s, e, "--tol", crossover.tol, "bisection tolerance");
    }
    PhysicalCmd phys;
    {
        auto* s = sub("physical", "laboratory parameters to model couplings", "json");
        auto& e = state["physical"].second;
        add_bound(s, e, "--species", phys.species, "li7 or rb87")->check(CLI::IsMember({"li7", "rb87"}));
        phys.mass_opt = add_optional(s, e, "--mass", phys.mass, "atomic mass in kg (overrides --species)");
        add_bound(s, e, "--a-sc", phys.a_sc, "scattering length in m")->required();
        phys.a_perp_opt = add_optional(s, e, "--a-perp", phys.a_perp, "transverse length in m (default from mass)");
        add_bound(s, e, "--omega-x", phys.omega_x, "longitudinal trap frequency, rad/s")->required();
        add_bound(s, e, "--omega-perp", phys.omega_perp, "transverse trap frequency, rad/s")->required();
        phys.kappa_hz_opt = add_optional(s, e, "--kappa-hz", phys.kappa_hz, "|K|/2pi in Hz");
        phys.tunnel_opt = add_optional(s, e, "--tunnel-rate", phys.tunnel_rate, "|K| in rad/s");
        add_bound(s, e, "--n", phys.n, "atom number")->required();
    }

    std::vector<std::string> argv;
    try {
        std::vector<std::string> names;
        for (const auto& [k, v] : state) names.push_back(k);
        argv = merge_config(args, names);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    auto& [common, echo] = state[name];
    try {
        const unsigned threads = resolve_thread_count(common.threads);
        Document doc;
        if (name == "spectrum") doc = spectrum.run(threads, err);
        else if (name == "ground") doc = ground.run(err);
        else if (name == "hz") doc = hz.run(threads, err);
        else if (name == "meanfield") doc = mf.run();
        else if (name == "losses") doc = losses.run(threads, err);
        else if (name == "hartree") doc = hartree_cmd.run();
        else if (name == "crossover") doc = crossover.run();
        else doc = phys.run();

        doc.command = name;
        json cfg = echo.dump();
        for (auto it = doc.config.begin(); it != doc.config.end(); ++it) cfg[it.key()] = it.value();
        doc.config = std::move(cfg);

        const std::string text = common.format == "json" ? render_json(doc) : render_csv(doc);
        if (common.output.empty() || common.output == "-")
            out << text;
        else
            write_file_atomically(common.output, text);
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const NumericalError& e) {
        err << "error: numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace sjj::cli
