// Scenario runner.
//
//   rqo sweep <config.json>      homodyne traces -> CSV + JSON summary
//   rqo validate <config.json>   cross-check battery -> JSON report
//   rqo transform <config.json>  transformed displacement -> CSV
//
// Exit codes: 0 success, 1 validation tolerance breach, 2 invalid config,
// 3 numeric failure. Output is deterministic: identical config and binary
// produce byte-identical files.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "rqo/displacement.hpp"
#include "rqo/homodyne.hpp"
#include "rqo/io.hpp"
#include "rqo/scenario.hpp"
#include "rqo/validation.hpp"

namespace fs = std::filesystem;

namespace {

std::string config_stem(const std::string& path) { return fs::path(path).stem().string(); }

nlohmann::json trace_summary(const rqo::HomodyneTrace& tr) {
    nlohmann::json j;
    double max_abs_x = 0.0, vmin = tr.V[0], vmax = tr.V[0];
    for (std::size_t i = 0; i < tr.X.size(); ++i) {
        max_abs_x = std::max(max_abs_x, std::abs(tr.X[i]));
        vmin = std::min(vmin, tr.V[i]);
        vmax = std::max(vmax, tr.V[i]);
    }
    j["max_abs_X"] = max_abs_x;
    j["V_min"] = vmin;
    j["V_max"] = vmax;
    return j;
}

int run_sweep(const rqo::ScenarioConfig& cfg, const std::string& stem, const fs::path& out_dir) {
    const rqo::ScenarioPipeline pipe = rqo::build_pipeline(cfg);
    const rqo::HomodyneSweep sw = rqo::analytic_sweep(pipe);

    rqo::write_file((out_dir / (stem + ".csv")).string(), rqo::sweep_csv(sw));

    nlohmann::json summary;
    summary["scenario"] = rqo::to_string(cfg.scenario);
    summary["balanced"] = trace_summary(sw.balanced);
    summary["self"] = trace_summary(sw.self_homodyne);
    summary["ideal"] = trace_summary(sw.ideal);
    // Self and ideal coincide where self attains its maximum amplitude.
    std::size_t imax = 0;
    for (std::size_t i = 1; i < sw.self_homodyne.X.size(); ++i)
        if (sw.self_homodyne.X[i] > sw.self_homodyne.X[imax]) imax = i;
    summary["self_ideal_coincidence_phi"] = sw.self_homodyne.phi[imax];
    summary["X_ideal_amplitude"] = sw.ideal.X.empty() ? 0.0 : *std::max_element(sw.ideal.X.begin(), sw.ideal.X.end());
    rqo::write_file((out_dir / (stem + "_summary.json")).string(), summary.dump(2) + "\n");

    std::cout << "wrote " << (out_dir / (stem + ".csv")).string() << " and summary\n";
    return 0;
}

int run_validate(const rqo::ScenarioConfig& cfg, const std::string& stem, const fs::path& out_dir) {
    const rqo::ValidationReport rep = rqo::run_validation(cfg);
    const nlohmann::json j = rqo::report_to_json(rep);
    rqo::write_file((out_dir / (stem + "_validation.json")).string(), j.dump(2) + "\n");
    for (const auto& c : rep.checks) {
        std::printf("%-28s %s  residual=%.3e  tol=%.3e%s\n", c.name.c_str(),
                    c.passed() ? "PASS" : "FAIL", c.residual, c.tolerance,
                    c.skipped ? "  (skipped)" : "");
    }
    return rep.all_passed() ? 0 : 1;
}

int run_transform(const rqo::ScenarioConfig& cfg, const std::string& stem, const fs::path& out_dir) {
    const rqo::ScenarioPipeline pipe = rqo::build_pipeline(cfg);

    rqo::TransformedDisplacement td;
    if (cfg.scenario == rqo::Scenario::minkowski_to_rindler)
        td = rqo::minkowski_to_rindler_displacement(*pipe.rindler, cfg.beta_abs, cfg.psi);
    else
        td = rqo::rindler_to_delayed_displacement(*pipe.delayed, cfg.beta_abs, cfg.psi);

    std::ostringstream weights;
    weights << "omega,right_weight_re,right_weight_im,left_weight_re,left_weight_im\n";
    const auto& right = td[rqo::Wedge::right];
    const auto& left = td[rqo::Wedge::left];
    for (std::size_t i = 0; i < td.grid.size(); ++i) {
        const rqo::cplx r = right.is_identity() ? rqo::cplx(0, 0) : right.mode_weights[i];
        const rqo::cplx l = left.is_identity() ? rqo::cplx(0, 0) : left.mode_weights[i];
        weights << rqo::format_double(td.grid.nodes[i]) << ',' << rqo::format_double(r.real())
                << ',' << rqo::format_double(r.imag()) << ',' << rqo::format_double(l.real())
                << ',' << rqo::format_double(l.imag()) << '\n';
    }
    rqo::write_file((out_dir / (stem + "_transform_weights.csv")).string(), weights.str());

    // Wedge amplitudes against the displacement phase.
    std::ostringstream amps;
    amps << "phi,alpha_right,alpha_left\n";
    for (double phi : rqo::phase_grid(cfg.n_phi)) {
        rqo::TransformedDisplacement t;
        if (cfg.scenario == rqo::Scenario::minkowski_to_rindler)
            t = rqo::minkowski_to_rindler_displacement(*pipe.rindler, cfg.beta_abs, phi);
        else
            t = rqo::rindler_to_delayed_displacement(*pipe.delayed, cfg.beta_abs, phi);
        amps << rqo::format_double(phi) << ',' << rqo::format_double(t[rqo::Wedge::right].amplitude)
             << ',' << rqo::format_double(t[rqo::Wedge::left].amplitude) << '\n';
    }
    rqo::write_file((out_dir / (stem + "_transform_amplitudes.csv")).string(), amps.str());

    std::cout << "alpha_right(psi) = " << rqo::format_double(right.amplitude)
              << "  alpha_left(psi) = " << rqo::format_double(left.amplitude) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Displacement-operator frame transforms and homodyne traces"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::size_t> n_phi_override;
    bool seedless = false;  // asserts determinism; there is no RNG to seed

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("config", config_path, "scenario config JSON")->required();
        sub->add_option("--out-dir", out_dir, "output directory");
        sub->add_option("--n-phi", n_phi_override, "override detection-phase node count");
        sub->add_flag("--seedless", seedless, "assert the run is deterministic (no RNG anywhere)");
    };
    CLI::App* sweep = app.add_subcommand("sweep", "compute homodyne traces");
    CLI::App* validate = app.add_subcommand("validate", "run the cross-check battery");
    CLI::App* transform = app.add_subcommand("transform", "emit transformed displacement data");
    add_common(sweep);
    add_common(validate);
    add_common(transform);

    CLI11_PARSE(app, argc, argv);

    rqo::ScenarioConfig cfg;
    try {
        cfg = rqo::load_config(config_path);
        if (n_phi_override) {
            cfg.n_phi = *n_phi_override;
            cfg.validate();
        }
    } catch (const rqo::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    try {
        fs::create_directories(out_dir);
        const std::string stem = config_stem(config_path);
        if (*sweep) return run_sweep(cfg, stem, out_dir);
        if (*validate) return run_validate(cfg, stem, out_dir);
        return run_transform(cfg, stem, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
}
