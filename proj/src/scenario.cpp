// scenario.cpp
#include "sqjc/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sqjc/dynamics.hpp"
#include "sqjc/entanglement.hpp"
#include "sqjc/errors.hpp"

namespace sqjc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double_for_name(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    os << content;
    if (!os) throw IoError("write failed for " + path.string());
}

FieldParams make_params(const ScenarioConfig& cfg, double n_s) {
    if (cfg.kind == FieldKind::PSCS) return FieldParams::pscs(cfg.n_c, n_s);
    if (cfg.q_derived) return FieldParams::mscs_derived(cfg.n_c, n_s);
    return FieldParams::mscs_fixed(cfg.n_c, n_s, cfg.q_fixed);
}

std::size_t pick_n_max(const ScenarioConfig& cfg, double n_s) {
    if (cfg.n_max_override) return *cfg.n_max_override;
    return default_n_max(cfg.n_c, n_s, cfg.tail_tol);
}

Pcd field_pcd(const FieldParams& p, std::size_t n_max, double tail_tol) {
    if (p.kind == FieldKind::PSCS) return pscs_pcd_amplitude(p, n_max, tail_tol);
    Pcd pcd = mscs_pcd(p, n_max);
    const double tail = 1.0 - pcd.sum();
    if (tail > tail_tol) {
        std::ostringstream os;
        os << "mscs counting distribution: tail mass " << tail << " exceeds tolerance " << tail_tol
           << " (n_c=" << p.n_c << ", n_s=" << p.n_s << ", n_max=" << n_max << ")";
        throw TruncationError(os.str());
    }
    return pcd;
}

double sup_diff(const TimeSeries& a, const TimeSeries& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

} // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

const char* to_string(OutputKind k) {
    switch (k) {
        case OutputKind::Pcd: return "pcd";
        case OutputKind::Inversion: return "inversion";
        case OutputKind::Negativity: return "negativity";
        case OutputKind::Quadratures: return "quadratures";
        case OutputKind::MandelQ: return "mandelq";
        case OutputKind::Wigner: return "wigner";
        case OutputKind::QWeight: return "qweight";
    }
    return "?";
}

OutputKind output_kind_from_string(const std::string& s) {
    for (OutputKind k : {OutputKind::Pcd, OutputKind::Inversion, OutputKind::Negativity,
                         OutputKind::Quadratures, OutputKind::MandelQ, OutputKind::Wigner,
                         OutputKind::QWeight})
        if (s == to_string(k)) return k;
    throw ConfigError("unknown output kind: " + s);
}

void ScenarioConfig::validate() const {
    if (n_c < 0.0) throw ConfigError("n_c must be >= 0");
    if (n_s_list.empty()) throw ConfigError("n_s_list must not be empty");
    for (double v : n_s_list)
        if (v < 0.0) throw ConfigError("every n_s must be >= 0");
    if (!q_derived && (q_fixed < 0.0 || q_fixed > 1.0))
        throw ConfigError("fixed q must lie in [0, 1]");
    if (time_points < 2) throw ConfigError("time_points must be >= 2");
    if (time_max <= 0.0) throw ConfigError("time_max must be > 0");
    if (tail_tol <= 0.0 || tail_tol >= 1.0) throw ConfigError("tail_tol must be in (0, 1)");
    if (outputs.empty()) throw ConfigError("at least one output kind required");
    if (kind == FieldKind::PSCS)
        for (OutputKind k : outputs)
            if (k == OutputKind::Quadratures || k == OutputKind::MandelQ ||
                k == OutputKind::Wigner)
                throw ConfigError(std::string(to_string(k)) + " output requires kind MSCS");
}

ScenarioConfig ScenarioConfig::from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    ScenarioConfig cfg;
    try {
        if (j.contains("kind")) {
            const std::string k = j["kind"].get<std::string>();
            if (k == "PSCS") cfg.kind = FieldKind::PSCS;
            else if (k == "MSCS") cfg.kind = FieldKind::MSCS;
            else throw ConfigError("kind must be PSCS or MSCS");
        }
        if (j.contains("n_c")) cfg.n_c = j["n_c"].get<double>();
        if (j.contains("n_s_list")) cfg.n_s_list = j["n_s_list"].get<std::vector<double>>();
        if (j.contains("q_mode")) {
            const std::string m = j["q_mode"].get<std::string>();
            if (m == "derived") cfg.q_derived = true;
            else if (m == "fixed") cfg.q_derived = false;
            else throw ConfigError("q_mode must be 'derived' or 'fixed'");
        }
        if (j.contains("q")) cfg.q_fixed = j["q"].get<double>();
        if (j.contains("time_max")) cfg.time_max = j["time_max"].get<double>();
        if (j.contains("time_points")) cfg.time_points = j["time_points"].get<std::size_t>();
        if (j.contains("n_max_override") && !j["n_max_override"].is_null())
            cfg.n_max_override = j["n_max_override"].get<std::size_t>();
        if (j.contains("tail_tol")) cfg.tail_tol = j["tail_tol"].get<double>();
        if (j.contains("omega_t")) cfg.omega_t = j["omega_t"].get<double>();
        if (j.contains("outputs")) {
            cfg.outputs.clear();
            for (const auto& o : j["outputs"]) cfg.outputs.insert(output_kind_from_string(o.get<std::string>()));
        }
        if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();
        if (j.contains("wigner")) {
            const auto& w = j["wigner"];
            if (w.contains("re_min")) cfg.wigner_grid.re_min = w["re_min"].get<double>();
            if (w.contains("re_max")) cfg.wigner_grid.re_max = w["re_max"].get<double>();
            if (w.contains("im_min")) cfg.wigner_grid.im_min = w["im_min"].get<double>();
            if (w.contains("im_max")) cfg.wigner_grid.im_max = w["im_max"].get<double>();
            if (w.contains("step")) cfg.wigner_grid.step = w["step"].get<double>();
        }
        if (j.contains("label")) cfg.label = j["label"].get<std::string>();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig ScenarioConfig::from_json_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot read config " + path.string());
    std::stringstream ss;
    ss << is.rdbuf();
    return from_json_text(ss.str());
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
    config.validate();
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) throw IoError("cannot create output directory " + config.output_dir.string());

    ScenarioResult result;
    ordered_json summary;
    summary["kind"] = config.kind == FieldKind::PSCS ? "PSCS" : "MSCS";
    summary["n_c"] = config.n_c;
    summary["q_mode"] = config.q_derived ? "derived" : "fixed";
    if (!config.q_derived) summary["q_fixed"] = config.q_fixed;
    summary["time_max"] = config.time_max;
    summary["time_points"] = config.time_points;
    summary["tail_tol"] = config.tail_tol;
    summary["runs"] = ordered_json::array();

    const std::string tag = config.label.empty() ? std::string() : "_" + config.label;
    auto emit = [&](const std::string& stem, const std::string& content) {
        const auto path = config.output_dir / (stem + tag + ".csv");
        write_file(path, content);
        result.files.push_back(path);
    };

    const TimeGrid grid = TimeGrid::uniform(config.time_max, config.time_points);

    // sweep outputs collect one row per n_s
    std::string qweight_csv = "n_s,q\n";
    std::string quadratures_csv = "n_s,mean_x1,mean_x2,var_x1,var_x2,product\n";
    std::string mandelq_csv = "n_s,mandel_q\n";

    for (double n_s : config.n_s_list) {
        const FieldParams params = make_params(config, n_s);
        const std::size_t n_max = pick_n_max(config, n_s);
        const std::string ns_name = format_double_for_name(n_s);

        ordered_json run;
        run["n_s"] = n_s;
        run["q"] = params.kind == FieldKind::MSCS ? params.q : 1.0;
        run["n_max"] = n_max;
        // certified truncation residue of the state(s) at this basis size
        // (reported unconditionally; the output paths enforce tail_tol)
        ordered_json tails;
        if (params.kind == FieldKind::PSCS) {
            tails["squeezed_coherent"] =
                squeezed_coherent_amplitudes(params.alpha, params.zeta, n_max, 1.0).tail_mass();
        } else {
            tails["coherent"] = coherent_amplitudes(params.alpha, n_max, 1.0).tail_mass();
            tails["squeezed_vacuum"] =
                squeezed_vacuum_amplitudes(params.zeta, n_max, 1.0).tail_mass();
        }
        run["tail_mass"] = std::move(tails);
        ordered_json diag;

        if (config.outputs.count(OutputKind::QWeight)) {
            const double q = mixing_weight(std::sqrt(config.n_c), params.zeta);
            qweight_csv += format_number(n_s) + "," + format_number(q) + "\n";
        }

        if (config.outputs.count(OutputKind::Pcd)) {
            const Pcd pcd = field_pcd(params, n_max, config.tail_tol);
            std::string csv = "n,probability\n";
            for (std::size_t n = 0; n < pcd.n_max(); ++n)
                csv += std::to_string(n) + "," + format_number(pcd.probabilities[n]) + "\n";
            emit("pcd_ns" + ns_name, csv);
            diag["pcd_sum"] = pcd.sum();
            if (params.kind == FieldKind::PSCS) {
                const PcdFormDeviation dev = pscs_pcd_form_deviation(params, n_max);
                diag["pcd_hermite_dev_power_n"] = dev.power_n_prefactor;
                diag["pcd_hermite_dev_squared"] = dev.squared_prefactor;
            } else {
                const DensityMatrix rho = mscs_density(params, n_max, config.tail_tol);
                double dmax = 0.0;
                const auto d = rho.diagonal();
                for (std::size_t n = 0; n < n_max; ++n)
                    dmax = std::max(dmax, std::abs(d[n] - pcd.probabilities[n]));
                diag["pcd_vs_density_diagonal"] = dmax;
            }
        }

        if (config.outputs.count(OutputKind::Inversion)) {
            TimeSeries w;
            if (params.kind == FieldKind::MSCS) {
                w = inversion_mscs_closed(params, grid, n_max);
                const TimeSeries ws = inversion_series(mscs_pcd(params, n_max), grid);
                diag["inversion_closed_vs_series"] = sup_diff(w, ws);
            } else {
                w = inversion_series(pscs_pcd_amplitude(params, n_max, config.tail_tol), grid);
            }
            std::string csv = "lambda_t,inversion\n";
            for (std::size_t i = 0; i < w.times.size(); ++i)
                csv += format_number(w.times[i]) + "," + format_number(w.values[i]) + "\n";
            emit("inversion_ns" + ns_name, csv);
        }

        if (config.outputs.count(OutputKind::Negativity)) {
            const DensityMatrix rho = params.kind == FieldKind::PSCS
                                          ? pscs_density(params, n_max, config.tail_tol)
                                          : mscs_density(params, n_max, config.tail_tol);
            const TimeSeries neg = negativity_series(rho, grid);
            std::string csv = "lambda_t,negativity\n";
            for (std::size_t i = 0; i < neg.times.size(); ++i)
                csv += format_number(neg.times[i]) + "," + format_number(neg.values[i]) + "\n";
            emit("negativity_ns" + ns_name, csv);
            double mx = 0.0, mn = 1.0;
            for (double v : neg.values) {
                mx = std::max(mx, v);
                mn = std::min(mn, v);
            }
            diag["negativity_max"] = mx;
            diag["negativity_min"] = mn;
        }

        if (config.outputs.count(OutputKind::Quadratures)) {
            const QuadratureReport r = quadratures_mscs(params, config.omega_t);
            quadratures_csv += format_number(n_s) + "," + format_number(r.mean_x1) + "," +
                               format_number(r.mean_x2) + "," + format_number(r.var_x1) + "," +
                               format_number(r.var_x2) + "," + format_number(r.product) + "\n";
        }

        if (config.outputs.count(OutputKind::MandelQ)) {
            const Pcd pcd = mscs_pcd(params, n_max);
            const double q_pcd = mandel_q(pcd);
            mandelq_csv += format_number(n_s) + "," + format_number(q_pcd) + "\n";
            // closed moments of the mixture
            const double mean = params.q * params.n_c + (1.0 - params.q) * params.n_s;
            const double m2 = params.q * (params.n_c * params.n_c + params.n_c) +
                              (1.0 - params.q) * (3.0 * params.n_s * params.n_s + 2.0 * params.n_s);
            const double q_closed = (m2 - mean * mean) / mean - 1.0;
            diag["mandel_q_vs_closed_moments"] = std::abs(q_pcd - q_closed);
        }

        if (config.outputs.count(OutputKind::Wigner)) {
            const PhaseSpaceGrid g = wigner_mscs(params, config.wigner_grid);
            std::string csv = "re_alpha,im_alpha,w\n";
            for (std::size_t j = 0; j < g.n_im; ++j)
                for (std::size_t i = 0; i < g.n_re; ++i)
                    csv += format_number(g.re_at(i)) + "," + format_number(g.im_at(j)) + "," +
                           format_number(g.value(i, j)) + "\n";
            emit("wigner_ns" + ns_name, csv);
            diag["wigner_mass"] = g.integral();
            diag["wigner_min"] = g.min_value();
            // spot-check the closed form against the parity oracle
            const DensityMatrix rho = mscs_density(params, n_max, config.tail_tol);
            double dev = 0.0;
            for (cplx pt : {cplx(0.0, 0.0), cplx(std::sqrt(config.n_c), 0.0), cplx(1.0, -1.0)}) {
                const double w_closed = wigner_mscs_point(params, pt);
                dev = std::max(dev, std::abs(w_closed - wigner_parity_oracle(rho, pt)));
            }
            diag["wigner_oracle_dev"] = dev;
        }

        run["diagnostics"] = std::move(diag);
        summary["runs"].push_back(std::move(run));
    }

    if (config.outputs.count(OutputKind::QWeight)) emit("qweight", qweight_csv);
    if (config.outputs.count(OutputKind::Quadratures)) emit("quadratures", quadratures_csv);
    if (config.outputs.count(OutputKind::MandelQ)) emit("mandelq", mandelq_csv);

    summary["files"] = ordered_json::array();
    for (const auto& f : result.files) summary["files"].push_back(f.filename().string());

    result.summary_json = summary.dump(2) + "\n";
    const auto spath = config.output_dir / ("summary" + tag + ".json");
    write_file(spath, result.summary_json);
    result.files.push_back(spath);
    return result;
}

namespace {

const std::vector<double> kStandardNsList{0.0, 1.0, 2.0, 5.0, 8.0, 10.0};

std::vector<double> linspace_values(double lo, double hi, std::size_t count) {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i)
        v[i] = lo + (hi - lo) * double(i) / double(count - 1);
    return v;
}

ScenarioConfig base_config(FieldKind kind, double n_c, bool derived, OutputKind out) {
    ScenarioConfig cfg;
    cfg.kind = kind;
    cfg.n_c = n_c;
    cfg.n_s_list = kStandardNsList;
    cfg.q_derived = derived;
    cfg.q_fixed = 0.8;
    cfg.outputs = {out};
    return cfg;
}

} // namespace

std::vector<ScenarioConfig> preset(const std::string& name) {
    // fig1..fig6: N_c = 20 grids with the overlap-derived q; fig7..fig17: the
    // fixed q = 0.8 study at N_c = 10 (and 10/20/30 for the Mandel Q sweep).
    if (name == "fig1") return {base_config(FieldKind::PSCS, 20.0, true, OutputKind::Pcd)};
    if (name == "fig2") {
        auto cfg = base_config(FieldKind::MSCS, 20.0, true, OutputKind::Pcd);
        cfg.outputs.insert(OutputKind::QWeight);
        return {cfg};
    }
    if (name == "fig3") return {base_config(FieldKind::PSCS, 20.0, true, OutputKind::Inversion)};
    if (name == "fig4") return {base_config(FieldKind::MSCS, 20.0, true, OutputKind::Inversion)};
    if (name == "fig5") return {base_config(FieldKind::PSCS, 20.0, true, OutputKind::Negativity)};
    if (name == "fig6") return {base_config(FieldKind::MSCS, 20.0, true, OutputKind::Negativity)};
    if (name == "fig7") return {base_config(FieldKind::PSCS, 10.0, true, OutputKind::Pcd)};
    if (name == "fig8") return {base_config(FieldKind::MSCS, 10.0, false, OutputKind::Pcd)};
    if (name == "fig9") return {base_config(FieldKind::PSCS, 10.0, true, OutputKind::Inversion)};
    if (name == "fig10") return {base_config(FieldKind::MSCS, 10.0, false, OutputKind::Inversion)};
    if (name == "fig11") return {base_config(FieldKind::PSCS, 10.0, true, OutputKind::Negativity)};
    if (name == "fig12") return {base_config(FieldKind::MSCS, 10.0, false, OutputKind::Negativity)};
    if (name == "fig13" || name == "fig14" || name == "fig15") {
        auto cfg = base_config(FieldKind::MSCS, 10.0, false, OutputKind::Quadratures);
        cfg.n_s_list = linspace_values(0.0, 10.0, 101);
        return {cfg};
    }
    if (name == "fig16") {
        std::vector<ScenarioConfig> cfgs;
        for (double n_c : {10.0, 20.0, 30.0}) {
            auto cfg = base_config(FieldKind::MSCS, n_c, false, OutputKind::MandelQ);
            cfg.n_s_list = linspace_values(0.0, 10.0, 101);
            cfg.label = "nc" + format_double_for_name(n_c);
            cfgs.push_back(cfg);
        }
        return cfgs;
    }
    if (name == "fig17") {
        auto cfg = base_config(FieldKind::MSCS, 10.0, false, OutputKind::Wigner);
        cfg.n_s_list = {2.0};
        return {cfg};
    }
    throw ConfigError("unknown preset: " + name + " (expected fig1..fig17)");
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (int i = 1; i <= 17; ++i) names.push_back("fig" + std::to_string(i));
    return names;
}

bool OracleSuiteReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.informational && !c.pass) return false;
    return true;
}

void print_report(const OracleSuiteReport& report, std::ostream& os) {
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
        const char* status = c.informational ? "info" : (c.pass ? "pass" : "FAIL");
        if (!c.informational && !c.pass) ++failed;
        char line[256];
        std::snprintf(line, sizeof(line), "[%4s] %-58s observed %.3e  tol %.3e\n", status,
                      c.name.c_str(), c.observed, c.tolerance);
        os << line;
    }
    os << (report.all_passed() ? "oracle suite: all checks passed\n"
                               : "oracle suite: " + std::to_string(failed) + " check(s) failed\n");
}

} // namespace sqjc
