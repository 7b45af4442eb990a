#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hfm/cli.hpp"
#include "oracles.hpp"

using namespace hfm;
using namespace hfm::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("hfm_test_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

struct Result {
    int code;
    std::string out, err;
};

Result invoke(std::vector<std::string> args, const std::map<std::string, std::string>& env = {}) {
    args.insert(args.begin(), "hfm");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err, env);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("field ranges") {
    CHECK(parse_range("0:2:3") == std::vector<double>{0.0, 1.0, 2.0});
    CHECK(parse_range("1.5") == std::vector<double>{1.5});
    CHECK_THROWS_AS(parse_range("0:1"), ConfigError);
    CHECK_THROWS_AS(parse_range("0:1:x"), ConfigError);
    CHECK_THROWS_AS(parse_range("-1:1:3"), ConfigError);
    CHECK_THROWS_AS(parse_range("0:1:0"), ConfigError);
}

TEST_CASE("setting names") {
    for (const auto& s : settings()) {
        CHECK(s.env.rfind("HFM_", 0) == 0);
        CHECK(s.flag.find('_') == std::string::npos);
    }
    RunConfig c;
    CHECK_THROWS_AS(apply_setting(c, "colour", "red"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "k_max", "six"), ConfigError);
    CHECK_THROWS_AS(apply_setting(c, "rho0", "nan"), ConfigError);
}

TEST_CASE("beta follows the material unless set") {
    RunConfig c;
    CHECK(c.dot.beta == doctest::Approx(oracle::coulomb_meV(12.0, oracle::length_nm(5.0, 0.067))).epsilon(1e-8));
    apply_setting(c, "hbar_omega0_meV", "10");
    CHECK(c.dot.beta == doctest::Approx(oracle::coulomb_meV(12.0, oracle::length_nm(10.0, 0.067))).epsilon(1e-8));
    apply_setting(c, "beta_meV", "-3");
    apply_setting(c, "epsilon_r", "13");
    CHECK(c.dot.beta == -3.0);
    apply_setting(c, "beta_meV", "default");
    CHECK(c.dot.beta == doctest::Approx(oracle::coulomb_meV(13.0, oracle::length_nm(10.0, 0.067))).epsilon(1e-8));
}

TEST_CASE("config JSON round trip") {
    RunConfig c;
    for (auto [k, v] : std::vector<std::pair<std::string, std::string>>{{"hbar_omega0_meV", "3.25"},
                                                                        {"beta_meV", "1.1"},
                                                                        {"rho0", "0.7"},
                                                                        {"k_max", "5"},
                                                                        {"L", "1"},
                                                                        {"symmetry", "mixed"},
                                                                        {"prefactor", "paper"},
                                                                        {"basis_scale", "auto"},
                                                                        {"what", "cm"},
                                                                        {"b_range", "0:1:4"},
                                                                        {"threads", "2"}})
        apply_setting(c, k, v);
    RunConfig d;
    apply_json(d, to_json(c));
    CHECK(to_json(d) == to_json(c));
    CHECK(d.solver.symmetry == Symmetry::mixed);
    CHECK(d.solver.basis_scale == 0.0);
    CHECK(d.field_values().size() == 4);

    RunConfig e;
    CHECK_THROWS_AS(apply_json(e, nlohmann::json{{"kmax", 3}}), ConfigError);
    CHECK_THROWS_AS(apply_json(e, nlohmann::json{{"k_max", true}}), ConfigError);
    CHECK_THROWS_AS(apply_json(e, nlohmann::json::array()), ConfigError);
    apply_json(e, nlohmann::json{{"beta_meV", nullptr}});
    CHECK_FALSE(e.beta_explicit);
}

TEST_CASE("manifest round trip") {
    RunManifest m;
    m.subcommand = "sweep";
    m.config = to_json(RunConfig{});
    m.outputs = {"a.csv", "b.csv"};
    m.wall_clock_s = 1.25;
    m.started_at = "2026-01-01T00:00:00Z";
    m.code_version = "0.1.0";
    m.source_hash = source_hash();
    const RunManifest back = RunManifest::from_json(nlohmann::json::parse(m.to_json().dump()));
    CHECK(back.to_json() == m.to_json());
    CHECK_THROWS_AS(RunManifest::from_json(nlohmann::json{{"subcommand", "x"}}), ConfigError);
}

TEST_CASE("layer precedence: file < environment < flag") {
    TempDir dir("precedence");
    const std::string cfg = dir / "c.json";
    std::ofstream(cfg) << R"({"cm_n_max": 0, "m_max": 1, "hbar_omega0_meV": 2.0})";
    const std::string out = dir / "cm.csv";

    // file alone: ħω₀ = 2
    REQUIRE(invoke({"cm-spectrum", "--config", cfg, "--out", out}).code == exit_ok);
    auto t = SpectrumTable::from_csv(slurp(out));
    CHECK(t.rows.size() == 3);
    CHECK(t.rows.front()[3] == 2.0 * 2);

    // environment beats file
    REQUIRE(invoke({"cm-spectrum", "--config", cfg, "--out", out}, {{"HFM_HBAR_OMEGA0_MEV", "3"}}).code == exit_ok);
    t = SpectrumTable::from_csv(slurp(out));
    CHECK(t.rows.front()[3] == 3.0 * 2);

    // flag beats environment; HFM_CONFIG stands in for --config
    REQUIRE(invoke({"cm-spectrum", "--hbar-omega0-meV", "4", "--out", out},
                   {{"HFM_HBAR_OMEGA0_MEV", "3"}, {"HFM_CONFIG", cfg}})
                .code == exit_ok);
    t = SpectrumTable::from_csv(slurp(out));
    CHECK(t.rows.size() == 3);
    CHECK(t.rows.front()[3] == 4.0 * 2);
}

TEST_CASE("cm-spectrum output and manifest") {
    TempDir dir("cm");
    const std::string out = dir / "cm.csv";
    const Result r = invoke({"cm-spectrum", "--b", "0:2:3", "--n-max", "1", "--m-max", "5", "--out", out});
    REQUIRE(r.code == exit_ok);
    const SpectrumTable t = SpectrumTable::from_csv(slurp(out));
    CHECK_NOTHROW(t.validate());
    CHECK(t.rows.size() == 3u * 2u * 11u);
    CHECK(t.rows[5][3] == 5.0);  // n = 0, m = 0
    CHECK(*t.find("manifest") == "cm.csv.manifest.json");

    const RunManifest m = RunManifest::from_json(nlohmann::json::parse(slurp(out + ".manifest.json")));
    CHECK(m.subcommand == "cm-spectrum");
    CHECK(m.outputs == std::vector<std::string>{out});
    CHECK(m.config.at("b_range") == "0:2:3");
    CHECK(m.source_hash == source_hash());
    CHECK(m.wall_clock_s >= 0.0);
}

TEST_CASE("ground-state output") {
    TempDir dir("gs");
    const std::string out = dir / "gs.json";
    const Result r = invoke({"ground-state", "--k-max", "4", "--n-max", "6", "--out", out});
    REQUIRE(r.code == exit_ok);
    const auto j = nlohmann::json::parse(slurp(out));
    const auto g = ground_state(DotConfig::gaas_default(), [] {
        SolverOptions o;
        o.k_max = 4;
        o.n_max = 6;
        return o;
    }());
    CHECK(j.at("energy_meV").get<double>() == g.energy_meV);
    const SpectrumTable trace = SpectrumTable::from_csv(slurp(dir / "gs_trace.csv"));
    CHECK(trace.rows.size() == g.trace.size());
    CHECK(fs::exists(out + ".manifest.json"));
}

TEST_CASE("exit codes") {
    TempDir dir("codes");
    CHECK(invoke({"--help"}).code == exit_ok);
    CHECK(invoke({}).code == exit_config);
    CHECK(invoke({"cm-spectrum", "--bogus"}).code == exit_config);
    CHECK(invoke({"cm-spectrum", "--b", "2:1"}).code == exit_config);
    CHECK(invoke({"cm-spectrum", "--out", dir / "x.csv"}, {{"HFM_M_MAX", "lots"}}).code == exit_config);
    CHECK(invoke({"cm-spectrum", "--config", dir / "missing.json"}).code == exit_config);
    CHECK(invoke({"ground-state", "--k-max", "3", "--out", dir / "g.json"}).code == exit_config);
    CHECK(invoke({"ground-state", "--k-max", "0", "--symmetry", "antisymmetric", "--out", dir / "g.json"}).code ==
          exit_solver);
    CHECK(invoke({"cm-spectrum", "--out", dir / "no/such/dir/x.csv"}).code == exit_io);
}

TEST_CASE("selfcheck") {
    Result r = invoke({"selfcheck"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("FAIL") == std::string::npos);
    // a deliberately poor angular rule must be caught
    r = invoke({"selfcheck", "--n-alpha", "4"});
    CHECK(r.code == exit_invariant);
    CHECK(r.out.find("FAIL orthonormality") != std::string::npos);
}

TEST_CASE("sweep output does not depend on threads") {
    TempDir a("sweep_a"), b("sweep_b");
    const std::vector<std::string> common = {"sweep", "--what", "interacting", "--b", "0:3:4", "--k-max", "4",
                                             "--n-max", "6", "--levels", "2"};
    auto with = [&](std::vector<std::string> extra) {
        std::vector<std::string> v = common;
        v.insert(v.end(), extra.begin(), extra.end());
        return v;
    };
    REQUIRE(invoke(with({"--threads", "1", "--out", a / "s.csv"})).code == exit_ok);
    REQUIRE(invoke(with({"--threads", "3", "--out", b / "s.csv"})).code == exit_ok);
    CHECK(slurp(a / "s.csv") == slurp(b / "s.csv"));
    REQUIRE(invoke(with({"--threads", "1", "--out", a / "s.csv"})).code == exit_ok);
    CHECK(slurp(a / "s.csv") == slurp(b / "s.csv"));
}

}
