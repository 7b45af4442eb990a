#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hfm/spectrum.hpp"

namespace hfm::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_io = 1,
    exit_config = 2,
    exit_solver = 3,
    exit_invariant = 4,
};

/// Everything a subcommand needs, after defaults, config file, environment and
/// flags have been merged (in that order, later layers win).
struct RunConfig {
    DotConfig dot = DotConfig::gaas_default();
    bool beta_explicit = false;  ///< false: β follows ħω₀ and the material
    SolverOptions solver;
    SweepOptions sweep;
    std::string b_range;  ///< "START:STOP:STEPS"; empty means the single field dot.b_field
    std::string out;

    std::vector<double> field_values() const;
    void validate() const;
};

nlohmann::json to_json(const RunConfig& c);

/// Keys accepted in config files and their environment/flag spellings.
struct SettingInfo {
    std::string key;   ///< config-file key
    std::string flag;  ///< long flag without the leading dashes
    std::string env;   ///< environment variable
    std::string help;
};

const std::vector<SettingInfo>& settings();

inline constexpr const char* env_prefix = "HFM_";

/// Applies one setting given as text (environment or command line).
void apply_setting(RunConfig& c, const std::string& key, const std::string& text);

/// Applies a JSON config object. Unknown keys are rejected.
void apply_json(RunConfig& c, const nlohmann::json& j);

/// Applies every HFM_* entry of `env`; other entries are ignored.
void apply_environment(RunConfig& c, const std::map<std::string, std::string>& env);
std::map<std::string, std::string> process_environment();

/// Parses "START:STOP:STEPS".
std::vector<double> parse_range(const std::string& text);

struct RunManifest {
    std::string subcommand;
    nlohmann::json config;
    std::vector<std::string> outputs;
    double wall_clock_s = 0.0;
    std::string started_at;  ///< UTC, ISO 8601
    std::string code_version;
    std::string source_hash;

    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);
};

std::string source_hash();

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Fast invariant suite: harmonic orthonormality (K ≤ 4), Raynal–Revai unitarity,
/// log-element analytic vs quadrature, β = 0 reduction, grand-angular eigenvalues.
std::vector<CheckOutcome> run_selfcheck(const QuadratureOrders& orders);

/// Entry point of the `hfm` executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::map<std::string, std::string>& env);
int run(int argc, const char* const* argv);

}  // namespace hfm::cli
