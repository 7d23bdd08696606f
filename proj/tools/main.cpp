// sqjc command-line front end: emits CSV datasets for the photon statistics,
// atomic inversion, entanglement and phase-space quantities of squeezed
// coherent light in the resonant Jaynes-Cummings model, and runs the oracle
// cross-check suite.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqjc/errors.hpp"
#include "sqjc/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

struct CommonFlags {
    std::string config_path;
    std::string out_dir;
    std::string kind;
    double n_c = -1.0;
    std::vector<double> n_s;
    double q = -1.0;
    long long n_max = -1;
    double t_max = -1.0;
    long long points = -1;
    double omega_t = 0.0;
    double tail_tol = -1.0;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON scenario config; flags override its fields");
    cmd->add_option("--out", f.out_dir, "output directory");
    cmd->add_option("--kind", f.kind, "PSCS or MSCS");
    cmd->add_option("--nc", f.n_c, "mean coherent photon number");
    cmd->add_option("--ns", f.n_s, "mean squeezed photon numbers (repeatable)");
    cmd->add_option("--q", f.q, "fixed mixing weight in [0,1]; omit to derive from the overlap rule");
    cmd->add_option("--nmax", f.n_max, "override the automatic basis size");
    cmd->add_option("--tmax", f.t_max, "largest dimensionless time");
    cmd->add_option("--points", f.points, "number of time samples");
    cmd->add_option("--omega-t", f.omega_t, "field phase w*t for quadrature outputs");
    cmd->add_option("--tail-tol", f.tail_tol, "truncation tail tolerance");
}

sqjc::ScenarioConfig build_config(const CommonFlags& f, sqjc::OutputKind kind) {
    sqjc::ScenarioConfig cfg;
    if (!f.config_path.empty()) cfg = sqjc::ScenarioConfig::from_json_file(f.config_path);

    if (!f.kind.empty()) {
        if (f.kind == "PSCS") cfg.kind = sqjc::FieldKind::PSCS;
        else if (f.kind == "MSCS") cfg.kind = sqjc::FieldKind::MSCS;
        else throw sqjc::ConfigError("--kind must be PSCS or MSCS");
    }
    if (f.n_c >= 0.0) cfg.n_c = f.n_c;
    if (!f.n_s.empty()) cfg.n_s_list = f.n_s;
    if (f.q >= 0.0) {
        cfg.q_derived = false;
        cfg.q_fixed = f.q;
    }
    if (f.n_max > 0) cfg.n_max_override = std::size_t(f.n_max);
    if (f.t_max > 0.0) cfg.time_max = f.t_max;
    if (f.points > 0) cfg.time_points = std::size_t(f.points);
    if (f.tail_tol > 0.0) cfg.tail_tol = f.tail_tol;
    if (!f.out_dir.empty()) cfg.output_dir = f.out_dir;
    cfg.omega_t = f.omega_t;
    cfg.outputs = {kind};
    return cfg;
}

void report_files(const sqjc::ScenarioResult& result) {
    for (const auto& f : result.files) std::cout << "wrote " << f.string() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jaynes-Cummings dynamics with squeezed and mixed squeezed-coherent light"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
        sqjc::OutputKind kind;
    };
    const std::vector<Sub> subs = {
        {"pcd", "photon counting distributions", sqjc::OutputKind::Pcd},
        {"inversion", "atomic inversion W(t)", sqjc::OutputKind::Inversion},
        {"negativity", "entanglement negativity N(t)", sqjc::OutputKind::Negativity},
        {"quadratures", "quadrature means/variances vs n_s", sqjc::OutputKind::Quadratures},
        {"mandelq", "Mandel Q parameter vs n_s", sqjc::OutputKind::MandelQ},
        {"wigner", "Wigner function on a phase-space grid", sqjc::OutputKind::Wigner},
        {"qweight", "overlap-derived mixing weight vs n_s", sqjc::OutputKind::QWeight},
    };

    std::vector<CommonFlags> flags(subs.size());
    std::vector<CLI::App*> cmds;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        CLI::App* c = app.add_subcommand(subs[i].name, subs[i].help);
        add_common_flags(c, flags[i]);
        cmds.push_back(c);
    }

    std::string preset_name;
    CommonFlags preset_flags;
    CLI::App* cmd_preset =
        app.add_subcommand("preset", "run a named figure preset (fig1..fig17)");
    cmd_preset->add_option("name", preset_name, "preset name")->required();
    cmd_preset->add_option("--out", preset_flags.out_dir, "output directory");
    cmd_preset->add_option("--nmax", preset_flags.n_max, "override the automatic basis size");
    cmd_preset->add_option("--tmax", preset_flags.t_max, "largest dimensionless time");
    cmd_preset->add_option("--points", preset_flags.points, "number of time samples");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the oracle cross-check suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (cmd_verify->parsed()) {
            const sqjc::OracleSuiteReport report = sqjc::run_oracle_suite();
            sqjc::print_report(report, std::cout);
            return report.all_passed() ? kExitOk : kExitNumerical;
        }
        if (cmd_preset->parsed()) {
            for (sqjc::ScenarioConfig cfg : sqjc::preset(preset_name)) {
                if (!preset_flags.out_dir.empty()) cfg.output_dir = preset_flags.out_dir;
                if (preset_flags.n_max > 0) cfg.n_max_override = std::size_t(preset_flags.n_max);
                if (preset_flags.t_max > 0.0) cfg.time_max = preset_flags.t_max;
                if (preset_flags.points > 0) cfg.time_points = std::size_t(preset_flags.points);
                report_files(sqjc::run_scenario(cfg));
            }
            return kExitOk;
        }
        for (std::size_t i = 0; i < subs.size(); ++i) {
            if (!cmds[i]->parsed()) continue;
            const sqjc::ScenarioConfig cfg = build_config(flags[i], subs[i].kind);
            report_files(sqjc::run_scenario(cfg));
            return kExitOk;
        }
        std::cerr << "no subcommand selected\n";
        return kExitConfig;
    } catch (const sqjc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const sqjc::DegenerateInput& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const sqjc::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        // truncation, non-convergence and anything else numerical
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}
