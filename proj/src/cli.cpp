#include "hfm/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#ifndef HFM_SOURCE_HASH
#define HFM_SOURCE_HASH "unknown"
#endif

extern char** environ;

namespace hfm::cli {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_int(const std::string& key, const std::string& text) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing");
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw ConfigError("setting '" + key + "' expects an integer, got '" + text + "'");
    }
}

double parse_real(const std::string& key, const std::string& text) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size() || !std::isfinite(v)) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("setting '" + key + "' expects a number, got '" + text + "'");
    }
}

std::string iso_utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    os << text;
    if (!os) throw IoError("write to '" + path + "' failed");
}

std::string manifest_path(const std::string& out) { return out + ".manifest.json"; }

std::string file_name(const std::string& path) { return std::filesystem::path(path).filename().string(); }

}  // namespace

const std::vector<SettingInfo>& settings() {
    static const std::vector<SettingInfo> table = [] {
        const std::vector<std::pair<std::string, std::string>> keys = {
            {"hbar_omega0_meV", "confinement energy ħω₀ (meV)"},
            {"m_eff_ratio", "effective mass m*/m_e"},
            {"epsilon_r", "relative permittivity"},
            {"b_tesla", "magnetic field (T) when no range is given"},
            {"b_range", "field range START:STOP:STEPS (T)"},
            {"beta_meV", "pair coupling β (meV); default e²/(ε_r ℓ₀)"},
            {"rho0", "reference length of the logarithm, in units of sqrt(ħ/(μω₀))"},
            {"k_max", "largest grand angular momentum"},
            {"n_max", "largest hyperradial index"},
            {"L", "total planar angular momentum of the relative motion"},
            {"symmetry", "spatial symmetry: symmetric, mixed, antisymmetric"},
            {"prefactor", "non-interacting energy prefactor: oracle or paper"},
            {"basis_scale", "hyperradial width λ, or 'auto' for the variational choice"},
            {"n_alpha", "Gauss-Legendre order in the hyperangle"},
            {"n_phi", "points per planar angle"},
            {"n_log", "order of the endpoint-log rule"},
            {"what", "sweep kind: cm, relative-noninteracting, interacting"},
            {"levels", "interacting levels per field point"},
            {"cm_n_max", "largest centre-of-mass radial index"},
            {"m_max", "largest |m| of the centre-of-mass levels"},
            {"threads", "worker threads for sweeps"},
            {"out", "output path"},
        };
        std::vector<SettingInfo> t;
        for (const auto& [key, help] : keys) {
            std::string flag = key;
            std::string env = env_prefix;
            for (char& ch : flag)
                if (ch == '_') ch = '-';
            for (char ch : key) env.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
            t.push_back({key, flag, env, help});
        }
        return t;
    }();
    return table;
}

std::vector<double> parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() == 1) return {parse_real("b_range", parts[0])};
    if (parts.size() != 3) throw ConfigError("field range must be START:STOP:STEPS, got '" + text + "'");
    const double start = parse_real("b_range", parts[0]);
    const double stop = parse_real("b_range", parts[1]);
    const int steps = parse_int("b_range", parts[2]);
    if (start < 0 || stop < 0) throw ConfigError("magnetic field must be non-negative");
    return linspace(start, stop, steps);
}

std::vector<double> RunConfig::field_values() const {
    if (b_range.empty()) return {dot.b_field};
    return parse_range(b_range);
}

void RunConfig::validate() const {
    dot.validate();
    solver.validate();
    if (sweep.levels < 1) throw ConfigError("levels must be >= 1");
    if (sweep.cm_n_max < 0 || sweep.cm_m_max < 0) throw ConfigError("centre-of-mass truncation must be >= 0");
    if (sweep.threads < 1) throw ConfigError("threads must be >= 1");
    for (double b : field_values())
        if (b < 0) throw ConfigError("magnetic field must be non-negative");
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& text) {
    if (key == "hbar_omega0_meV") c.dot.hbar_omega0 = parse_real(key, text);
    else if (key == "m_eff_ratio") c.dot.material.m_eff_ratio = parse_real(key, text);
    else if (key == "epsilon_r") c.dot.material.epsilon_r = parse_real(key, text);
    else if (key == "b_tesla") c.dot.b_field = parse_real(key, text);
    else if (key == "b_range") c.b_range = text;
    else if (key == "beta_meV") {
        if (text == "default") {
            c.beta_explicit = false;
        } else {
            c.dot.beta = parse_real(key, text);
            c.beta_explicit = true;
        }
    } else if (key == "rho0") c.dot.rho0 = parse_real(key, text);
    else if (key == "k_max") c.solver.k_max = parse_int(key, text);
    else if (key == "n_max") c.solver.n_max = parse_int(key, text);
    else if (key == "L") c.solver.L = parse_int(key, text);
    else if (key == "symmetry") c.solver.symmetry = symmetry_from_string(text);
    else if (key == "prefactor") c.solver.prefactor = prefactor_from_string(text);
    else if (key == "basis_scale") c.solver.basis_scale = text == "auto" ? 0.0 : parse_real(key, text);
    else if (key == "n_alpha") c.solver.quadrature.n_alpha = parse_int(key, text);
    else if (key == "n_phi") c.solver.quadrature.n_phi = parse_int(key, text);
    else if (key == "n_log") c.solver.quadrature.n_log = parse_int(key, text);
    else if (key == "what") c.sweep.kind = sweep_kind_from_string(text);
    else if (key == "levels") c.sweep.levels = parse_int(key, text);
    else if (key == "cm_n_max") c.sweep.cm_n_max = parse_int(key, text);
    else if (key == "m_max") c.sweep.cm_m_max = parse_int(key, text);
    else if (key == "threads") c.sweep.threads = parse_int(key, text);
    else if (key == "out") c.out = text;
    else throw ConfigError("unknown setting '" + key + "'");
    if (!c.beta_explicit) c.dot.beta = default_beta(c.dot.hbar_omega0 > 0 ? c.dot.hbar_omega0 : 1.0, c.dot.material);
}

void apply_json(RunConfig& c, const json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const auto& s : settings()) known = known || s.key == key;
        if (!known) throw ConfigError("unknown config key '" + key + "'");
        if (value.is_null()) {
            if (key != "beta_meV") throw ConfigError("config key '" + key + "' may not be null");
            apply_setting(c, key, "default");
        } else if (value.is_string()) {
            apply_setting(c, key, value.get<std::string>());
        } else if (value.is_number_integer()) {
            apply_setting(c, key, std::to_string(value.get<long long>()));
        } else if (value.is_number()) {
            apply_setting(c, key, format_double(value.get<double>()));
        } else {
            throw ConfigError("config key '" + key + "' must be a number or a string");
        }
    }
}

std::map<std::string, std::string> process_environment() {
    std::map<std::string, std::string> env;
    for (char** e = environ; e && *e; ++e) {
        const std::string kv = *e;
        const auto eq = kv.find('=');
        if (eq != std::string::npos && kv.rfind(env_prefix, 0) == 0) env[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return env;
}

void apply_environment(RunConfig& c, const std::map<std::string, std::string>& env) {
    for (const auto& s : settings()) {
        const auto it = env.find(s.env);
        if (it != env.end()) apply_setting(c, s.key, it->second);
    }
}

json to_json(const RunConfig& c) {
    json j;
    j["hbar_omega0_meV"] = c.dot.hbar_omega0;
    j["m_eff_ratio"] = c.dot.material.m_eff_ratio;
    j["epsilon_r"] = c.dot.material.epsilon_r;
    j["b_tesla"] = c.dot.b_field;
    j["b_range"] = c.b_range;
    j["beta_meV"] = c.dot.beta;
    j["rho0"] = c.dot.rho0;
    j["k_max"] = c.solver.k_max;
    j["n_max"] = c.solver.n_max;
    j["L"] = c.solver.L;
    j["symmetry"] = to_string(c.solver.symmetry);
    j["prefactor"] = to_string(c.solver.prefactor);
    if (c.solver.basis_scale > 0) j["basis_scale"] = c.solver.basis_scale;
    else j["basis_scale"] = "auto";
    j["n_alpha"] = c.solver.quadrature.n_alpha;
    j["n_phi"] = c.solver.quadrature.n_phi;
    j["n_log"] = c.solver.quadrature.n_log;
    j["what"] = to_string(c.sweep.kind);
    j["levels"] = c.sweep.levels;
    j["cm_n_max"] = c.sweep.cm_n_max;
    j["m_max"] = c.sweep.cm_m_max;
    j["threads"] = c.sweep.threads;
    j["out"] = c.out;
    return j;
}

json RunManifest::to_json() const {
    return json{{"subcommand", subcommand},   {"config", config},         {"outputs", outputs},
                {"wall_clock_s", wall_clock_s}, {"started_at", started_at}, {"code_version", code_version},
                {"source_hash", source_hash}};
}

RunManifest RunManifest::from_json(const json& j) {
    try {
        RunManifest m;
        m.subcommand = j.at("subcommand").get<std::string>();
        m.config = j.at("config");
        m.outputs = j.at("outputs").get<std::vector<std::string>>();
        m.wall_clock_s = j.at("wall_clock_s").get<double>();
        m.started_at = j.at("started_at").get<std::string>();
        m.code_version = j.at("code_version").get<std::string>();
        m.source_hash = j.at("source_hash").get<std::string>();
        return m;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed manifest: ") + e.what());
    }
}

std::string source_hash() { return HFM_SOURCE_HASH; }

std::vector<CheckOutcome> run_selfcheck(const QuadratureOrders& orders) {
    std::vector<CheckOutcome> out;
    auto guarded = [&out](const std::string& name, auto&& body) {
        try {
            out.push_back(body());
        } catch (const std::exception& e) {
            out.push_back({name, false, e.what()});
        }
        out.back().name = name;
    };
    auto fmt = [](const char* what, double v) {
        std::ostringstream os;
        os << what << ' ' << v;
        return os.str();
    };

    guarded("orthonormality", [&] {
        const AngularGrid grid(orders.n_alpha, orders.n_phi);
        double dev = 0.0;
        for (int L : {0, 1}) {
            const auto ch = enumerate_channels(4, L);
            const Eigen::MatrixXcd g = gram_matrix(ch, grid);
            dev = std::max(dev, (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff());
        }
        return CheckOutcome{"", dev < 1e-10, fmt("max |G - I| =", dev)};
    });

    guarded("rr-unitarity", [&] {
        const AngularGrid grid(orders.n_alpha, orders.n_phi);
        double unit = 0.0, comp = 0.0;
        for (int K = 0; K <= 4; ++K) {
            for (int L = -K; L <= K; L += 2) {
                const Eigen::MatrixXd m12 = rr_matrix(K, L, 1, 2, grid);
                const Eigen::MatrixXd m23 = rr_matrix(K, L, 2, 3, grid);
                const Eigen::MatrixXd m31 = rr_matrix(K, L, 3, 1, grid);
                unit = std::max({unit, unitarity_defect(m12), unitarity_defect(m23), unitarity_defect(m31)});
                const Eigen::MatrixXd cycle = m31 * m23 * m12;
                comp = std::max(comp,
                                (cycle - Eigen::MatrixXd::Identity(cycle.rows(), cycle.cols())).cwiseAbs().maxCoeff());
            }
        }
        return CheckOutcome{"", unit < 1e-8 && comp < 1e-8,
                            fmt("unitarity defect", unit) + ", " + fmt("cycle defect", comp)};
    });

    guarded("log-elements", [&] {
        double dev = 0.0;
        for (int K = 0; K <= 4; K += 2)
            for (int N = 0; N <= 8; ++N)
                for (int Np = N; Np <= 8; ++Np)
                    dev = std::max(dev, std::abs(log_radial_element_analytic(K, N, Np, 1.0, 1.0) -
                                                 log_radial_element_quadrature(K, N, Np, 1.0, 1.0)));
        return CheckOutcome{"", dev < 1e-10, fmt("max |analytic - quadrature| =", dev)};
    });

    guarded("beta0-reduction", [&] {
        double dev = 0.0;
        DotConfig dot = DotConfig::gaas_default();
        dot.beta = 0.0;
        dot.b_field = 1.0;
        const Frequencies f = frequencies(dot);
        for (PrefactorMode mode : {PrefactorMode::oracle, PrefactorMode::paper}) {
            SolverOptions opt;
            opt.k_max = 4;
            opt.n_max = 6;
            opt.prefactor = mode;
            opt.quadrature = orders;
            const RelativeProblem problem(opt);
            const Hamiltonian h = problem.assemble(dot);
            for (Eigen::Index i = 0; i < h.H.rows(); ++i)
                for (Eigen::Index j = 0; j < h.H.cols(); ++j) {
                    const BasisState& s = h.states[i];
                    const double expect =
                        i == j ? noninteracting_energy(s.N, s.K, opt.L, f.omega_eff, f.omega_L, mode) : 0.0;
                    dev = std::max(dev, std::abs(h.H(i, j) - expect));
                }
        }
        return CheckOutcome{"", dev < 1e-8, fmt("max |H - E0| (meV) =", dev)};
    });

    guarded("grand-angular", [&] {
        const AngularGrid grid(orders.n_alpha, 8);
        double worst = 0.0;
        for (int K = 0; K <= 4; ++K)
            for (const Channel& c : channels_at(K, K % 2))
                worst = std::max(worst, grand_angular_apply(c, grid).rel_error);
        return CheckOutcome{"", worst < 1e-6, fmt("max relative error of K(K+2) =", worst)};
    });

    return out;
}

namespace {

struct Session {
    RunConfig config;
    std::string subcommand;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::string started_at = iso_utc_now();

    void finish(const std::vector<std::string>& outputs, const std::string& primary) const {
        RunManifest m;
        m.subcommand = subcommand;
        m.config = to_json(config);
        m.outputs = outputs;
        m.wall_clock_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        m.started_at = started_at;
        m.code_version = code_version;
        m.source_hash = source_hash();
        write_text(manifest_path(primary), m.to_json().dump(2) + "\n");
    }
};

void write_table(const Session& s, SpectrumTable table, const std::string& path) {
    table.set("manifest", file_name(manifest_path(path)));
    write_text(path, table.to_csv());
    s.finish({path}, path);
}

int cmd_table(Session& s, SweepKind kind, std::ostream& out) {
    s.config.sweep.kind = kind;
    s.config.validate();
    const SpectrumTable t = field_sweep(s.config.dot, s.config.field_values(), s.config.solver, s.config.sweep);
    write_table(s, t, s.config.out);
    out << "wrote " << t.rows.size() << " rows to " << s.config.out << '\n';
    return exit_ok;
}

int cmd_ground_state(Session& s, std::ostream& out) {
    RunConfig& c = s.config;
    c.validate();
    if ((c.solver.k_max - std::abs(c.solver.L)) % 2 != 0)
        throw ConfigError("k_max must have the parity of L (even for the L = 0 ground state)");
    if (!c.b_range.empty()) throw ConfigError("ground-state takes a single field; use b_tesla instead of a range");

    const GroundStateResult g = ground_state(c.dot, c.solver);

    std::filesystem::path trace_path(c.out);
    trace_path.replace_extension();
    const std::string trace_file = trace_path.string() + "_trace.csv";

    SpectrumTable trace;
    trace.set("kind", "ground-state-trace");
    trace.set("beta_meV", format_double(c.dot.beta));
    trace.set("rho0", format_double(c.dot.rho0));
    trace.set("k_max", std::to_string(c.solver.k_max));
    trace.set("n_max", std::to_string(c.solver.n_max));
    trace.set("prefactor", to_string(c.solver.prefactor));
    trace.set("code_version", code_version);
    trace.set("b_tesla", format_double(c.dot.b_field));
    trace.set("symmetry", to_string(c.solver.symmetry));
    trace.set("basis_scale", format_double(g.basis_scale));
    trace.set("manifest", file_name(manifest_path(c.out)));
    trace.columns = {"k_max", "energy_meV"};
    for (const auto& [k, e] : g.trace) trace.rows.push_back({double(k), e});
    trace.validate();

    json result;
    result["energy_meV"] = g.energy_meV;
    result["total_energy_meV"] = g.total_energy_meV;
    result["basis_scale"] = g.basis_scale;
    result["overlap_condition"] = g.overlap_condition;
    result["trace"] = json::array();
    for (const auto& [k, e] : g.trace) result["trace"].push_back({{"k_max", k}, {"energy_meV", e}});
    result["coefficients"] = json::array();
    for (std::size_t i = 0; i < g.states.size(); ++i)
        result["coefficients"].push_back({{"state", g.states[i].angular},
                                          {"K", g.states[i].K},
                                          {"N", g.states[i].N},
                                          {"a", g.coefficients[static_cast<Eigen::Index>(i)]}});
    result["config"] = to_json(c);
    result["code_version"] = code_version;
    result["manifest"] = file_name(manifest_path(c.out));
    result["trace_csv"] = file_name(trace_file);

    write_text(c.out, result.dump(2) + "\n");
    write_text(trace_file, trace.to_csv());
    s.finish({c.out, trace_file}, c.out);

    out.precision(12);
    out << "ground energy (relative) " << g.energy_meV << " meV\n";
    out << "ground energy (total)    " << g.total_energy_meV << " meV\n";
    for (const auto& [k, e] : g.trace) out << "  K_max=" << k << "  " << e << " meV\n";
    return exit_ok;
}

int cmd_selfcheck(Session& s, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto checks = run_selfcheck(s.config.solver.quadrature);
    bool ok = true;
    json report = json::array();
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        ok = ok && c.passed;
        report.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << (ok ? "selfcheck passed" : "selfcheck FAILED") << " in " << secs << " s\n";
    if (!s.config.out.empty()) {
        write_text(s.config.out, json{{"passed", ok}, {"checks", report}, {"seconds", secs}}.dump(2) + "\n");
        s.finish({s.config.out}, s.config.out);
    }
    return ok ? exit_ok : exit_invariant;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::map<std::string, std::string>& env) {
    CLI::App app{"Hyperspherical spectra of three electrons in a parabolic quantum dot", "hfm"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(code_version) + " (" + source_hash() + ")");

    struct Sub {
        CLI::App* app;
        std::string default_out;
        std::string config_path;
        std::map<std::string, std::string> values;
        std::map<std::string, CLI::Option*> options;
    };
    std::map<std::string, Sub> subs;

    auto add = [&](const std::string& name, const std::string& help, const std::string& default_out,
                   const std::vector<std::string>& keys) {
        Sub& s = subs[name];
        s.app = app.add_subcommand(name, help);
        s.default_out = default_out;
        s.app->add_option("--config", s.config_path, "JSON config file (also HFM_CONFIG)");
        for (const auto& info : settings()) {
            if (std::find(keys.begin(), keys.end(), info.key) == keys.end()) continue;
            std::string names = "--" + info.flag;
            if (info.key == "b_range") names = "--b," + names;
            if (info.key == "symmetry") names += ",--sector";
            if (name == "cm-spectrum" && info.key == "cm_n_max") names += ",--n-max";
            s.options[info.key] = s.app->add_option(names, s.values[info.key], info.help + " [" + info.env + "]");
        }
    };

    const std::vector<std::string> physics = {"hbar_omega0_meV", "m_eff_ratio", "epsilon_r", "b_tesla",
                                              "beta_meV",        "rho0",        "out"};
    auto with = [&physics](std::vector<std::string> extra) {
        extra.insert(extra.end(), physics.begin(), physics.end());
        return extra;
    };
    const std::vector<std::string> basis = {"k_max", "n_max", "L", "symmetry", "prefactor", "basis_scale",
                                            "n_alpha", "n_phi", "n_log"};
    auto join = [](std::vector<std::string> a, const std::vector<std::string>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };

    add("cm-spectrum", "Fock-Darwin centre-of-mass levels over a field range", "cm_spectrum.csv",
        with({"b_range", "cm_n_max", "m_max"}));
    add("rel-spectrum", "non-interacting relative levels over a field range", "rel_spectrum.csv",
        with({"b_range", "k_max", "n_max", "L", "prefactor"}));
    add("ground-state", "interacting ground state with its K_max convergence trace", "ground_state.json",
        with(basis));
    add("sweep", "field sweep of centre-of-mass, relative or interacting levels", "sweep.csv",
        with(join(basis, {"b_range", "what", "levels", "cm_n_max", "m_max", "threads"})));
    add("selfcheck", "fast invariant suite", "", {"n_alpha", "n_phi", "n_log", "out"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        for (auto& [name, sub] : subs) {
            if (!sub.app->parsed()) continue;
            Session session;
            session.subcommand = name;
            RunConfig& c = session.config;
            c.out = sub.default_out;

            std::string config_path = sub.config_path;
            if (config_path.empty()) {
                const auto it = env.find(std::string(env_prefix) + "CONFIG");
                if (it != env.end()) config_path = it->second;
            }
            if (!config_path.empty()) {
                std::ifstream is(config_path);
                if (!is) throw ConfigError("cannot read config file '" + config_path + "'");
                json j;
                try {
                    j = json::parse(is);
                } catch (const json::exception& e) {
                    throw ConfigError("config file '" + config_path + "': " + e.what());
                }
                apply_json(c, j);
            }
            apply_environment(c, env);
            for (const auto& [key, opt] : sub.options)
                if (opt->count() > 0) apply_setting(c, key, sub.values[key]);

            if (name == "cm-spectrum") return cmd_table(session, SweepKind::cm, out);
            if (name == "rel-spectrum") return cmd_table(session, SweepKind::relative_noninteracting, out);
            if (name == "sweep") return cmd_table(session, c.sweep.kind, out);
            if (name == "ground-state") return cmd_ground_state(session, out);
            if (name == "selfcheck") return cmd_selfcheck(session, out);
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const SolverError& e) {
        err << "solver error: " << e.what() << '\n';
        return exit_solver;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    }
    return exit_config;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr, process_environment()); }

}  // namespace hfm::cli
