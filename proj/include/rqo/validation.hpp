// Cross-check battery behind the `validate` subcommand.
//
// Each check pins one layer of the pipeline to an independent route:
//   gamma_identity      |Gamma(1+ix)|^2 against pi x / sinh(pi x)
//   magnitude_law       |A_{k w}|^2 2 pi a k = 1 on a (k, w) log grid
//   z_factor_law        |Z_w|^2 2 pi a = 1 over six decades of w
//   unruh_completeness  quadrature of |A_w|^2 + |B_w|^2 = 1 (wide grid)
//   rindler_commutator  wedge commutator sum = 1 (wide grid)
//   delayed_commutator  same for the delayed decomposition (lattice-extended
//                       observer grid so the principal-value diagonal sees
//                       symmetric neighbours)
//   appendix_relations  the +-t conjugation relations between the delayed
//                       coefficient matrices, elementwise on a 16x16 grid
//   dual_route          gamma-ratio forms vs the direct cosh/sinh route
//   tms_symplectic      frame-change two-mode-squeeze symplectic residual
//   delay_symplectic    discretized delayed-transform residual (reported,
//                       looser tolerance: the kernel converges slowly)
//   oracle_agreement    analytic X/V traces vs the Gaussian simulator
// A check fails the run when residual > tolerance; `validate` exits 1 in
// that case with the per-check detail in the JSON report.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rqo/delayed_rindler.hpp"
#include "rqo/frequency_grid.hpp"
#include "rqo/gaussian_state.hpp"
#include "rqo/homodyne.hpp"
#include "rqo/minkowski_rindler.hpp"
#include "rqo/oracle.hpp"
#include "rqo/scenario.hpp"
#include "rqo/special_functions.hpp"

namespace rqo {

struct ValidationCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool skipped = false;
    std::string note;

    bool passed() const { return skipped || residual <= tolerance; }
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const ValidationCheck& c) { return c.passed(); });
    }
};

inline ValidationCheck check_gamma_identity() {
    ValidationCheck c{"gamma_identity", 0.0, 1e-10};
    for (int i = 0; i < 100; ++i) {
        const double x = 0.1 * std::pow(100.0, i / 99.0);
        const double lhs = std::exp(2.0 * std::real(log_gamma_complex(cplx(1.0, x))));
        const double rhs = std::numbers::pi * x / std::sinh(std::numbers::pi * x);
        c.residual = std::max(c.residual, std::abs(lhs - rhs) / rhs);
    }
    return c;
}

inline ValidationCheck check_magnitude_law() {
    ValidationCheck c{"magnitude_law", 0.0, 1e-10};
    for (double a : {0.5, 1.0, 2.0}) {
        const Acceleration acc(a);
        for (int i = 0; i < 20; ++i)
            for (int j = 0; j < 20; ++j) {
                const double k = 0.01 * std::pow(1e4, i / 19.0);
                const double w = 0.01 * std::pow(1e4, j / 19.0);
                const double mag2 = std::norm(a_k_omega(k, w, acc));
                c.residual = std::max(c.residual, std::abs(mag2 * 2.0 * std::numbers::pi * a * k - 1.0));
            }
    }
    return c;
}

inline ValidationCheck check_z_factor_law(double a = 1.0) {
    ValidationCheck c{"z_factor_law", 0.0, 1e-10};
    const Acceleration acc(a);
    for (int i = 0; i <= 60; ++i) {
        const double w = 1e-3 * std::pow(1e6, i / 60.0);
        c.residual = std::max(c.residual,
                              std::abs(std::norm(z_factor(w, acc)) * 2.0 * std::numbers::pi * a - 1.0));
    }
    return c;
}

// Wide-band completeness of the Unruh decomposition of the scenario packet.
inline ValidationCheck check_unruh_completeness(const ScenarioConfig& cfg, double refine = 1.0) {
    ValidationCheck c{"unruh_completeness", 0.0, 1e-4};
    const Acceleration acc(cfg.a);
    const GaussianWavePacket wp =
        make_gaussian(cfg.wp_center, cfg.wp_width, cfg.wp_offset, minkowski_packet_axis(cfg, refine));
    const FrequencyGrid wide = FrequencyGrid::log_spaced(
        1e-6, cfg.omega_max, static_cast<std::size_t>(std::llround(2048 * refine)));
    const UnruhOverlap uo = unruh_overlap(wp, wide, acc);
    c.residual = std::abs(uo.completeness() - 1.0);
    return c;
}

inline ValidationCheck check_rindler_commutator(const ScenarioConfig& cfg, double refine = 1.0) {
    ValidationCheck c{"rindler_commutator", 0.0, 1e-4};
    const Acceleration acc(cfg.a);
    const GaussianWavePacket wp =
        make_gaussian(cfg.wp_center, cfg.wp_width, cfg.wp_offset, minkowski_packet_axis(cfg, refine));
    const FrequencyGrid wide = FrequencyGrid::log_spaced(
        1e-6, cfg.omega_max, static_cast<std::size_t>(std::llround(2048 * refine)));
    const RindlerCoefficients rc = rindler_coefficients(unruh_overlap(wp, wide, acc), acc);
    c.residual = std::abs(rc.commutator_sum() - 1.0);
    return c;
}

// Observer grid sharing the packet's log lattice, extended to [lo, hi].
inline FrequencyGrid lattice_extension(const FrequencyGrid& src, double lo, double hi) {
    const double h = std::log(src.nodes[1] / src.nodes[0]);
    const double v0 = std::log(src.nodes[0]);
    const auto below = static_cast<long>(std::ceil((v0 - std::log(lo)) / h));
    const auto above = static_cast<long>(std::ceil((std::log(hi) - v0) / h));
    FrequencyGrid g;
    g.nodes.reserve(below + above + 1);
    g.weights.reserve(below + above + 1);
    for (long i = -below; i <= above; ++i) g.nodes.push_back(std::exp(v0 + h * static_cast<double>(i)));
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const double wgt = g.nodes[i] * h * ((i == 0 || i + 1 == g.nodes.size()) ? 0.5 : 1.0);
        g.weights.push_back(wgt);
    }
    g.omega_min = g.nodes.front();
    g.omega_max = g.nodes.back();
    return g;
}

inline ValidationCheck check_delayed_commutator(const ScenarioConfig& cfg, double refine = 1.0) {
    ValidationCheck c{"delayed_commutator", 0.0, 1e-4};
    const Acceleration acc(cfg.a);
    const GaussianWavePacket g =
        make_gaussian(cfg.wp_center, cfg.wp_width, cfg.wp_offset, rindler_packet_grid(cfg, refine));
    const FrequencyGrid obs = lattice_extension(g.grid, 1e-5, 2e4);
    const DelayedOverlap ov = delayed_overlap(g, obs, cfg.delay, acc);
    c.residual = std::abs(ov.commutator_sum() - 1.0);
    return c;
}

inline ValidationCheck check_appendix_relations(double a = 1.0, double t = 2.5) {
    ValidationCheck c{"appendix_relations", 0.0, 1e-10};
    const Acceleration acc(a);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            const double w = 0.2 + 0.35 * i;
            const double wp = 0.27 + 0.33 * j;
            // Base-coefficient relations A(+t) = D(-t)*, B(+t) = C(-t)*.
            const UnruhTimeCoeffs cp = unruh_time_coeffs(w, wp, t, acc);
            const UnruhTimeCoeffs cm = unruh_time_coeffs(w, wp, -t, acc);
            const double scale_ad = std::max(std::abs(cp.A), 1e-30);
            const double scale_bc = std::max(std::abs(cp.B), 1e-30);
            c.residual = std::max(c.residual, std::abs(cp.A - std::conj(cm.D)) / scale_ad);
            c.residual = std::max(c.residual, std::abs(cp.B - std::conj(cm.C)) / scale_bc);
            // Rindler-level relations between +t and -t entries.
            const DelayedRindlerEntry ep = rindler_delay_entry(w, wp, t, acc);
            const DelayedRindlerEntry em = rindler_delay_entry(w, wp, -t, acc);
            const double s1 = std::max(std::abs(ep.alpha_a), 1e-30);
            const double s2 = std::max(std::abs(ep.beta_a), 1e-30);
            const double s3 = std::max(std::abs(em.gamma_a), 1e-30);
            const double s4 = std::max(std::abs(em.delta_a), 1e-30);
            c.residual = std::max(c.residual, std::abs(ep.alpha_a - std::conj(em.gamma_b)) / s1);
            c.residual = std::max(c.residual, std::abs(ep.beta_a - std::conj(em.delta_b)) / s2);
            c.residual = std::max(c.residual, std::abs(em.gamma_a - std::conj(ep.alpha_b)) / s3);
            c.residual = std::max(c.residual, std::abs(em.delta_a - std::conj(ep.beta_b)) / s4);
            // gamma_a(|t|) = delta_a(|t|) = 0 holds exactly by construction.
            c.residual = std::max(c.residual, std::abs(ep.gamma_a));
            c.residual = std::max(c.residual, std::abs(ep.delta_a));
        }
    return c;
}

// Gamma-ratio forms against the direct cosh/sinh route (stable band only).
inline ValidationCheck check_dual_route(double a = 1.0, double t = 2.5) {
    ValidationCheck c{"dual_route", 0.0, 1e-8};
    const Acceleration acc(a);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) {
            const double w = 0.15 + 0.4 * i;
            const double wp = 0.2 + 0.39 * j;
            if (std::abs(w - wp) < 1e-2) continue;
            for (double tt : {t, -t}) {
                const DelayedRindlerEntry s = rindler_delay_entry(w, wp, tt, acc);
                const DelayedRindlerEntry d = rindler_delay_entry_direct(w, wp, tt, acc);
                const cplx* sv[8] = {&s.alpha_a, &s.beta_a, &s.gamma_a, &s.delta_a,
                                     &s.alpha_b, &s.beta_b, &s.gamma_b, &s.delta_b};
                const cplx* dv[8] = {&d.alpha_a, &d.beta_a, &d.gamma_a, &d.delta_a,
                                     &d.alpha_b, &d.beta_b, &d.gamma_b, &d.delta_b};
                for (int m = 0; m < 8; ++m) {
                    const double scale = std::max({std::abs(*sv[m]), std::abs(*dv[m]), 1e-3});
                    c.residual = std::max(c.residual, std::abs(*sv[m] - *dv[m]) / scale);
                }
            }
        }
    return c;
}

inline ValidationCheck check_tms_symplectic(const ScenarioConfig& cfg) {
    ValidationCheck c{"tms_symplectic", 0.0, 1e-10};
    const Acceleration acc(cfg.a);
    const FrequencyGrid g = FrequencyGrid::log_spaced(cfg.omega_min, cfg.omega_max, 128);
    std::vector<std::tuple<std::size_t, std::size_t, double>> pairs;
    for (std::size_t i = 0; i < g.size(); ++i)
        pairs.emplace_back(i, g.size() + i, squeezing_parameter(g.nodes[i], acc).r);
    c.residual = two_mode_squeeze_op(2 * g.size(), pairs).symplectic_residual();
    return c;
}

// Discretized delayed frame change; the residual measures quadrature quality
// of the principal-value kernel, so the gate is intentionally loose and the
// value is recorded for refinement studies.
inline ValidationCheck check_delay_symplectic(const ScenarioConfig& cfg, std::size_t n_modes = 96) {
    ValidationCheck c{"delay_symplectic", 0.0, 0.1};
    const Acceleration acc(cfg.a);
    const FrequencyGrid g = FrequencyGrid::log_spaced(1e-3, 1e3, n_modes);
    const DelayedRindlerCoeffs dc = rindler_delay_coeffs(g, g, cfg.delay, acc);
    const std::size_t M = g.size();
    Eigen::MatrixXcd U(2 * M, 2 * M), W(2 * M, 2 * M);
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = 0; j < M; ++j) {
            const double s = std::sqrt(g.weights[i] * g.weights[j]);
            const std::size_t idx = i * M + j;
            U(i, j) = s * dc.alpha_a[idx];
            U(i, M + j) = s * dc.gamma_a[idx];
            U(M + i, j) = s * dc.alpha_b[idx];
            U(M + i, M + j) = s * dc.gamma_b[idx];
            W(i, j) = s * dc.beta_a[idx];
            W(i, M + j) = s * dc.delta_a[idx];
            W(M + i, j) = s * dc.beta_b[idx];
            W(M + i, M + j) = s * dc.delta_b[idx];
        }
    c.residual = bogoliubov_symplectic(U, W).symplectic_residual();
    c.note = "discretization residual, refine grid to shrink";
    return c;
}

inline void append_oracle_checks(ValidationReport& rep, const ScenarioPipeline& p) {
    const HomodyneSweep an = analytic_sweep(p);
    const OracleSweep orc = oracle_sweep(p);
    const struct {
        const char* name;
        const HomodyneTrace* a;
        const OracleTrace* o;
    } rows[3] = {{"oracle_balanced", &an.balanced, &orc.balanced},
                 {"oracle_self", &an.self_homodyne, &orc.self_homodyne},
                 {"oracle_ideal", &an.ideal, &orc.ideal}};
    for (const auto& r : rows) {
        ValidationCheck cx{std::string(r.name) + "_X", 0.0, 5e-3};
        ValidationCheck cv{std::string(r.name) + "_V", 0.0, 5e-3};
        double xscale = 0.0;
        for (double v : r.a->X) xscale = std::max(xscale, std::abs(v));
        for (std::size_t i = 0; i < r.a->X.size(); ++i) {
            cx.residual = std::max(cx.residual, std::abs(r.a->X[i] - r.o->X[i]) / xscale);
            cv.residual = std::max(cv.residual, std::abs(r.a->V[i] - r.o->V[i]) / r.a->V[i]);
        }
        rep.checks.push_back(cx);
        rep.checks.push_back(cv);
    }
}

inline ValidationReport run_validation(const ScenarioConfig& cfg) {
    ValidationReport rep;
    rep.checks.push_back(check_gamma_identity());
    rep.checks.push_back(check_magnitude_law());
    rep.checks.push_back(check_z_factor_law(cfg.a));
    if (cfg.scenario == Scenario::minkowski_to_rindler) {
        rep.checks.push_back(check_unruh_completeness(cfg));
        rep.checks.push_back(check_rindler_commutator(cfg));
        rep.checks.push_back(check_tms_symplectic(cfg));
    } else {
        rep.checks.push_back(check_delayed_commutator(cfg));
        rep.checks.push_back(check_appendix_relations(cfg.a, cfg.delay));
        rep.checks.push_back(check_dual_route(cfg.a, cfg.delay));
        rep.checks.push_back(check_delay_symplectic(cfg));
    }
    if (cfg.oracle.enabled) {
        append_oracle_checks(rep, build_pipeline(cfg));
    } else {
        ValidationCheck c{"oracle_agreement", 0.0, 0.0, true, "oracle disabled in config"};
        rep.checks.push_back(c);
    }
    return rep;
}

inline nlohmann::json report_to_json(const ValidationReport& rep) {
    nlohmann::json out;
    out["all_passed"] = rep.all_passed();
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json j;
        j["name"] = c.name;
        j["residual"] = c.residual;
        j["tolerance"] = c.tolerance;
        j["passed"] = c.passed();
        if (c.skipped) j["skipped"] = true;
        if (!c.note.empty()) j["note"] = c.note;
        checks.push_back(j);
    }
    out["checks"] = checks;
    return out;
}

}  // namespace rqo
