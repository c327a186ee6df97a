// Operational homodyne simulation on discretized Gaussian states.
//
// The observed wedge of the Minkowski vacuum is prepared honestly: a
// two-wedge vacuum, the per-frequency two-mode squeezer (the frame-change
// symplectic), then a partial trace over the unobserved wedge. Signal and
// local-oscillator displacements shift mode i by sqrt(w_i) times the
// per-frequency amplitude; detection is a phase shifter on the oscillator
// modes followed by a pairwise balanced beam splitter, and all statistics are
// photon-number moments of the resulting Gaussian state at finite |alpha| --
// no strong-oscillator expansion anywhere. Agreement with the analytic
// module is therefore a two-sided check: it validates the closed-form traces
// and bounds the terms they drop.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqo/frequency_grid.hpp"
#include "rqo/gaussian_state.hpp"
#include "rqo/homodyne.hpp"
#include "rqo/special_functions.hpp"

namespace rqo {

// Thermal state of one observed wedge: two-wedge vacuum, two-mode squeeze
// with r_i = atanh(exp(-pi w_i / a)), trace out the partner wedge.
inline GaussianState thermal_wedge_state(const FrequencyGrid& grid, Acceleration acc) {
    const std::size_t M = grid.size();
    std::vector<std::tuple<std::size_t, std::size_t, double>> pairs;
    pairs.reserve(M);
    for (std::size_t i = 0; i < M; ++i)
        pairs.emplace_back(i, M + i, squeezing_parameter(grid.nodes[i], acc).r);
    const SymplecticOp tms = two_mode_squeeze_op(2 * M, pairs);
    const GaussianState full = apply(vacuum_state(2 * M), tms);
    std::vector<std::size_t> keep(M);
    for (std::size_t i = 0; i < M; ++i) keep[i] = i;
    return partial_trace(full, keep);
}

struct OracleTrace {
    std::vector<double> phi, X, V;
    bool strong_oscillator_ok = true;  // |alpha|^2 >> photons added by the signal
};

struct OracleSettings {
    double lo_amplitude = 1e3;
    double validity_ratio = 100.0;  // require <N_LO> >= ratio * <N'_signal-side>
};

namespace detail {

inline std::vector<cplx> mode_shifts(const FrequencyGrid& g, const std::vector<cplx>& u,
                                     double scale) {
    std::vector<cplx> s(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) s[i] = scale * std::sqrt(g.weights[i]) * u[i];
    return s;
}

}  // namespace detail

// Balanced homodyne: independent signal and oscillator families, phase shift
// on the oscillator, pairwise balanced beam splitter, difference count.
inline OracleTrace simulate_balanced(const LeftWedgeAmplitudes& am, double beta_mag, double psi,
                                     const std::vector<double>& phi_grid, Acceleration acc,
                                     const OracleSettings& cfg = {}) {
    const FrequencyGrid& g = am.grid;
    const std::size_t M = g.size();

    const GaussianState thermal = thermal_wedge_state(g, acc);
    GaussianState base;  // [signal 0..M-1 | oscillator M..2M-1]
    base.mean = Eigen::VectorXd::Zero(4 * M);
    base.cov = Eigen::MatrixXd::Zero(4 * M, 4 * M);
    base.cov.topLeftCorner(2 * M, 2 * M) = thermal.cov;
    base.cov.bottomRightCorner(2 * M, 2 * M) = thermal.cov;

    std::vector<cplx> shifts(2 * M, cplx(0, 0));
    const auto s_sig = detail::mode_shifts(g, am.at(psi), beta_mag);
    const auto s_lo = detail::mode_shifts(g, am.at(0.0), cfg.lo_amplitude);
    for (std::size_t i = 0; i < M; ++i) {
        shifts[i] = s_sig[i];
        shifts[M + i] = s_lo[i];
    }
    base = apply(base, displacement_op(shifts));

    std::vector<std::size_t> lo_modes(M);
    std::vector<std::pair<std::size_t, std::size_t>> bs_pairs(M);
    std::vector<double> q_diff(2 * M, -1.0);
    for (std::size_t i = 0; i < M; ++i) {
        lo_modes[i] = M + i;
        bs_pairs[i] = {i, M + i};
        q_diff[M + i] = 1.0;  // N_L - N
    }
    const double n_lo = mean_photon_number(base, lo_modes);
    const double n_sig = mean_photon_number(
        base, [&] { std::vector<std::size_t> v(M); for (std::size_t i = 0; i < M; ++i) v[i] = i; return v; }());

    const SymplecticOp bs = balanced_beam_splitter_op(2 * M, bs_pairs);

    OracleTrace out;
    out.phi = phi_grid;
    out.X.resize(phi_grid.size());
    out.V.resize(phi_grid.size());
    out.strong_oscillator_ok = n_lo >= cfg.validity_ratio * n_sig;
    for (std::size_t p = 0; p < phi_grid.size(); ++p) {
        GaussianState st = apply(base, phase_shift_op(2 * M, lo_modes, phi_grid[p]));
        st = apply(st, bs);
        const PhotonStats d = weighted_number_stats(st, q_diff);
        out.X[p] = d.mean / std::sqrt(n_lo);
        out.V[p] = d.variance / n_lo;
    }
    return out;
}

// Self homodyne: displace the observed mode family by the reference at the
// swept phase plus the signal, compare photon counts with and without the
// signal. Ideal homodyne is the same construction with the reference mode
// shape pinned at the signal phase and only its displacement phase swept.
inline OracleTrace simulate_self_or_ideal(const LeftWedgeAmplitudes& am, double beta_mag,
                                          double psi, const std::vector<double>& phi_grid,
                                          Acceleration acc, bool ideal,
                                          const OracleSettings& cfg = {}) {
    const FrequencyGrid& g = am.grid;
    const std::size_t M = g.size();
    const GaussianState thermal = thermal_wedge_state(g, acc);
    const auto s_sig = detail::mode_shifts(g, am.at(psi), beta_mag);
    const std::vector<double> q_all(M, 1.0);

    OracleTrace out;
    out.phi = phi_grid;
    out.X.resize(phi_grid.size());
    out.V.resize(phi_grid.size());
    double max_signal_count = 0.0;
    double min_ref_count = std::numeric_limits<double>::infinity();

    for (std::size_t p = 0; p < phi_grid.size(); ++p) {
        const double phi = phi_grid[p];
        std::vector<cplx> s_ref =
            ideal ? detail::mode_shifts(g, am.at(psi), cfg.lo_amplitude)
                  : detail::mode_shifts(g, am.at(phi), cfg.lo_amplitude);
        if (ideal)
            for (auto& v : s_ref) v *= std::polar(1.0, phi);

        GaussianState ref_only = apply(thermal, displacement_op(s_ref));
        const double n0 = mean_photon_number(ref_only, [&] {
            std::vector<std::size_t> v(M);
            for (std::size_t i = 0; i < M; ++i) v[i] = i;
            return v;
        }());

        std::vector<cplx> s_both(M);
        for (std::size_t i = 0; i < M; ++i) s_both[i] = s_ref[i] + s_sig[i];
        GaussianState with_signal = apply(thermal, displacement_op(s_both));
        const PhotonStats npp = weighted_number_stats(with_signal, q_all);

        out.X[p] = (npp.mean - n0) / std::sqrt(n0);
        out.V[p] = npp.variance / n0;
        max_signal_count = std::max(max_signal_count, std::abs(npp.mean - n0));
        min_ref_count = std::min(min_ref_count, n0);
    }
    out.strong_oscillator_ok = min_ref_count >= cfg.validity_ratio * max_signal_count;
    return out;
}

inline OracleTrace simulate_self(const LeftWedgeAmplitudes& am, double beta_mag, double psi,
                                 const std::vector<double>& phi_grid, Acceleration acc,
                                 const OracleSettings& cfg = {}) {
    return simulate_self_or_ideal(am, beta_mag, psi, phi_grid, acc, false, cfg);
}

inline OracleTrace simulate_ideal(const LeftWedgeAmplitudes& am, double beta_mag, double psi,
                                  const std::vector<double>& phi_grid, Acceleration acc,
                                  const OracleSettings& cfg = {}) {
    return simulate_self_or_ideal(am, beta_mag, psi, phi_grid, acc, true, cfg);
}

}  // namespace rqo
