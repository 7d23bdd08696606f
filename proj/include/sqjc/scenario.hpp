// scenario.hpp -- batch harness: scenario configs, figure presets, CSV/JSON
// emission, and the oracle cross-check suite behind the `verify` subcommand.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sqjc/observables.hpp"
#include "sqjc/states.hpp"

namespace sqjc {

enum class OutputKind { Pcd, Inversion, Negativity, Quadratures, MandelQ, Wigner, QWeight };

const char* to_string(OutputKind k);
OutputKind output_kind_from_string(const std::string& s);

struct ScenarioConfig {
    FieldKind kind = FieldKind::MSCS;
    double n_c = 20.0;
    std::vector<double> n_s_list{0.0};
    bool q_derived = true; // false: use q_fixed
    double q_fixed = 0.8;
    double time_max = 50.0;
    std::size_t time_points = 2001;
    std::optional<std::size_t> n_max_override;
    double tail_tol = kDefaultTailTol;
    double omega_t = 0.0; // phase for quadrature outputs
    std::set<OutputKind> outputs;
    std::filesystem::path output_dir = ".";
    WignerGridSpec wigner_grid = default_wigner_grid();
    std::string label; // distinguishes files when presets run several configs

    static ScenarioConfig from_json_file(const std::filesystem::path& path);
    static ScenarioConfig from_json_text(const std::string& text);
    void validate() const;
};

struct ScenarioResult {
    std::vector<std::filesystem::path> files;
    std::string summary_json;
};

// Runs one config: one CSV per (output kind, n_s) for the per-state outputs,
// one CSV per sweep output, plus summary.json.  Identical configs produce
// byte-identical files.
ScenarioResult run_scenario(const ScenarioConfig& config);

// Figure presets fig1..fig17.  A preset may expand to several configs
// (the Mandel Q figure sweeps three coherent amplitudes).
std::vector<ScenarioConfig> preset(const std::string& name);
std::vector<std::string> preset_names();

// Oracle cross-check suite at reduced sizes.
struct OracleCheck {
    std::string name;
    double tolerance = 0.0;
    double observed = 0.0;
    bool pass = true;
    bool informational = false; // measured and reported, not gating
};

struct OracleSuiteReport {
    std::vector<OracleCheck> checks;
    bool all_passed() const;
};

OracleSuiteReport run_oracle_suite();
void print_report(const OracleSuiteReport& report, std::ostream& os);

// Fixed-format scientific CSV cell: 12 significant digits, '.' separator.
std::string format_number(double v);

} // namespace sqjc
