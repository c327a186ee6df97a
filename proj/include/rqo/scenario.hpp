// Scenario assembly: config -> grids -> coefficient arrays -> traces.
//
// A scenario couples one Gaussian wavepacket signal to one observer frame:
//   minkowski_to_rindler: packet f(k), observed wedge = left Rindler.
//   rindler_to_delayed:   packet g(w) made by the right Rindler observer,
//                         observed modes = delayed left Rindler b_w(+delay).
// The detector band [omega_min, omega_max] applies to every observable
// integral (the variance diverges logarithmically without the low cutoff);
// completeness checks use separate wide grids built by the validation
// helpers below.

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqo/delayed_rindler.hpp"
#include "rqo/displacement.hpp"
#include "rqo/frequency_grid.hpp"
#include "rqo/homodyne.hpp"
#include "rqo/minkowski_rindler.hpp"
#include "rqo/oracle.hpp"
#include "rqo/special_functions.hpp"
#include "rqo/wavepacket.hpp"

namespace rqo {

struct OracleConfig {
    bool enabled = true;
    std::size_t n_modes = 128;
    double lo_amplitude = 1e3;
};

struct ScenarioConfig {
    int schema = 1;
    Scenario scenario = Scenario::minkowski_to_rindler;
    double a = 1.0;
    double wp_center = 1.0;  // k0 / omega0
    double wp_width = 0.2;   // sigma / delta
    double wp_offset = 1.0;  // V0 / v0
    double beta_abs = 1.0;
    double psi = 0.0;
    double omega_min = 1e-3;
    double omega_max = 20.0;
    std::size_t n_omega = 2048;
    std::size_t n_phi = 256;
    double delay = 2.5;  // scenario 2 only
    OracleConfig oracle;

    void validate() const {
        auto positive = [](double v, const char* name) {
            if (!(v > 0.0)) throw std::invalid_argument(std::string("config field '") + name + "' must be positive");
        };
        positive(a, "a");
        positive(wp_center, "wavepacket.center");
        positive(wp_width, "wavepacket.width");
        if (!(beta_abs >= 0.0)) throw std::invalid_argument("config field 'signal.beta_abs' must be >= 0");
        positive(omega_min, "cutoffs.omega_min");
        if (!(omega_max > omega_min))
            throw std::invalid_argument("config field 'cutoffs.omega_max' must exceed omega_min");
        if (n_omega < 16) throw std::invalid_argument("config field 'grid.n_omega' must be >= 16");
        if (n_phi < 4) throw std::invalid_argument("config field 'grid.n_phi' must be >= 4");
        if (scenario == Scenario::rindler_to_delayed) positive(delay, "delay");
        if (oracle.enabled && oracle.n_modes < 8)
            throw std::invalid_argument("config field 'oracle.n_modes' must be >= 8");
    }
};

// Minkowski packet axis: GL panels in log k sized for the fastest phase this
// scenario integrates (max omega plus the packet's own e^{-ikV0} rotation).
inline FrequencyGrid minkowski_packet_axis(const ScenarioConfig& cfg, double refine = 1.0) {
    const double k_hi = cfg.wp_center + 8.0 * cfg.wp_width;
    const double k_lo = std::max(1e-4 * std::min(cfg.a, cfg.wp_center), cfg.wp_center - 8.0 * cfg.wp_width);
    const double rate = cfg.omega_max / cfg.a + k_hi * std::abs(cfg.wp_offset);
    return oscillatory_log_axis(k_lo, k_hi, rate, refine);
}

// Rindler packet grid for scenario 2 (smooth integrands; log trapezoid).
inline FrequencyGrid rindler_packet_grid(const ScenarioConfig& cfg, double refine = 1.0) {
    const double lo = std::max(1e-4 * std::min(cfg.a, cfg.wp_center), cfg.wp_center - 8.0 * cfg.wp_width);
    const double hi = cfg.wp_center + 8.0 * cfg.wp_width;
    const auto n = static_cast<std::size_t>(std::llround(1024 * refine));
    return FrequencyGrid::log_spaced(lo, hi, n);
}

struct ScenarioPipeline {
    ScenarioConfig cfg;
    FrequencyGrid detector;            // observed-wedge omega grid
    GaussianWavePacket packet;
    LeftWedgeAmplitudes amplitudes;    // observed-wedge u(phase) structure
    std::optional<RindlerCoefficients> rindler;  // scenario 1
    std::optional<DelayedOverlap> delayed;       // scenario 2
};

inline ScenarioPipeline build_pipeline(const ScenarioConfig& cfg, double grid_refine = 1.0,
                                       std::optional<std::size_t> n_omega_override = {}) {
    cfg.validate();
    ScenarioPipeline p;
    p.cfg = cfg;
    const auto n_omega = n_omega_override.value_or(
        static_cast<std::size_t>(std::llround(static_cast<double>(cfg.n_omega) * grid_refine)));
    p.detector = FrequencyGrid::log_spaced(cfg.omega_min, cfg.omega_max, n_omega);
    const Acceleration acc(cfg.a);

    if (cfg.scenario == Scenario::minkowski_to_rindler) {
        p.packet = make_gaussian(cfg.wp_center, cfg.wp_width, cfg.wp_offset,
                                 minkowski_packet_axis(cfg, grid_refine));
        const UnruhOverlap uo = unruh_overlap(p.packet, p.detector, acc);
        p.rindler = rindler_coefficients(uo, acc);
        p.amplitudes = left_wedge_amplitudes(*p.rindler);
    } else {
        p.packet = make_gaussian(cfg.wp_center, cfg.wp_width, cfg.wp_offset,
                                 rindler_packet_grid(cfg, grid_refine));
        p.delayed = delayed_overlap(p.packet, p.detector, cfg.delay, acc);
        p.amplitudes = left_wedge_amplitudes(*p.delayed);
    }
    return p;
}

inline HomodyneSweep analytic_sweep(const ScenarioPipeline& p) {
    return homodyne_sweep(p.amplitudes, p.cfg.beta_abs, p.cfg.psi, phase_grid(p.cfg.n_phi),
                          Acceleration(p.cfg.a), p.cfg.scenario);
}

struct OracleSweep {
    OracleTrace balanced, self_homodyne, ideal;
};

// Oracle traces on a coarser grid of the same log family and cutoffs.
inline OracleSweep oracle_sweep(const ScenarioPipeline& p) {
    ScenarioConfig coarse = p.cfg;
    const ScenarioPipeline cp = build_pipeline(coarse, 1.0, p.cfg.oracle.n_modes);
    const Acceleration acc(p.cfg.a);
    const auto phi = phase_grid(p.cfg.n_phi);
    OracleSettings osc;
    osc.lo_amplitude = p.cfg.oracle.lo_amplitude;

    OracleSweep sw;
    sw.balanced = simulate_balanced(cp.amplitudes, p.cfg.beta_abs, p.cfg.psi, phi, acc, osc);
    sw.self_homodyne = simulate_self(cp.amplitudes, p.cfg.beta_abs, p.cfg.psi, phi, acc, osc);
    sw.ideal = simulate_ideal(cp.amplitudes, p.cfg.beta_abs, p.cfg.psi, phi, acc, osc);
    return sw;
}

}  // namespace rqo
