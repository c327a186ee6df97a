// Analytic quadrature amplitude and variance traces for balanced, self and
// ideal homodyne detection of a coherent signal, in both scenarios.
//
// Everything reduces to the per-frequency left-wedge displacement amplitudes
//   u_w(phase) = P_w e^{+i phase} + M_w e^{-i phase}
// with (P, M) = (f_eb*, -f_ebc) for Minkowski -> Rindler and
// (P, M) = (alpha_b_g, beta_b_g) for Rindler -> delayed Rindler. The signal
// contributes |beta| u(psi), the reference |alpha| u(phase_ref); the local
// oscillator magnitude cancels in the strong-oscillator limit implemented
// here (the Gaussian-state simulator quantifies the dropped finite-|alpha|
// terms).
//
// With <x,y> = sum_i w_i conj(x_i) y_i and ||x||^2 = <x,x>:
//   balanced: X(phi) = 2|beta| Re[ e^{-i phi} <u(0),   u(psi)> ] / ||u(0)||
//   self:     X(phi) = 2|beta| Re[           <u(phi), u(psi)> ] / ||u(phi)||
//   ideal:    X(phi) = 2|beta| Re[ e^{-i phi} <u(psi), u(psi)> ] / ||u(psi)||
//   V(phi)    = sum_i w_i |u_i(ref)|^2 (1 + 2 sinh^2 r_i) / ||u(ref)||^2
// with ref = 0 / phi / psi respectively. The variance quadrature shares the
// amplitude grid so discretization bias cancels between schemes.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqo/delayed_rindler.hpp"
#include "rqo/displacement.hpp"
#include "rqo/frequency_grid.hpp"
#include "rqo/minkowski_rindler.hpp"
#include "rqo/special_functions.hpp"
#include "rqo/wavepacket.hpp"

namespace rqo {

enum class HomodyneScheme { balanced, self, ideal };
enum class Scenario { minkowski_to_rindler, rindler_to_delayed };

inline const char* to_string(HomodyneScheme s) {
    switch (s) {
        case HomodyneScheme::balanced: return "balanced";
        case HomodyneScheme::self: return "self";
        default: return "ideal";
    }
}
inline const char* to_string(Scenario s) {
    return s == Scenario::minkowski_to_rindler ? "minkowski_to_rindler" : "rindler_to_delayed";
}

struct SignalSpec {
    double magnitude = 0.0;  // |beta|
    double phase = 0.0;      // psi
    GaussianWavePacket packet;
};

struct HomodyneTrace {
    HomodyneScheme scheme{};
    Scenario scenario{};
    std::vector<double> phi, X, V;
};

struct HomodyneSweep {
    HomodyneTrace balanced, self_homodyne, ideal;
};

// Observed-wedge amplitude structure u(phase) = plus e^{i phase} + minus e^{-i phase}.
struct LeftWedgeAmplitudes {
    FrequencyGrid grid;
    std::vector<cplx> plus, minus;

    std::vector<cplx> at(double phase) const {
        const cplx ep = std::polar(1.0, phase), em = std::conj(ep);
        std::vector<cplx> u(plus.size());
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = plus[i] * ep + minus[i] * em;
        return u;
    }
};

inline LeftWedgeAmplitudes left_wedge_amplitudes(const RindlerCoefficients& rc) {
    LeftWedgeAmplitudes am;
    am.grid = rc.grid;
    am.plus.resize(rc.grid.size());
    am.minus.resize(rc.grid.size());
    for (std::size_t i = 0; i < rc.grid.size(); ++i) {
        am.plus[i] = std::conj(rc.f_eb[i]);
        am.minus[i] = -rc.f_ebc[i];
    }
    return am;
}

inline LeftWedgeAmplitudes left_wedge_amplitudes(const DelayedOverlap& ov) {
    LeftWedgeAmplitudes am;
    am.grid = ov.grid_obs;
    am.plus = ov.alpha_b_g;
    am.minus = ov.beta_b_g;
    return am;
}

// Spec op: per-frequency left-wedge amplitude array magnitude * u(phase).
inline std::vector<cplx> per_frequency_amplitudes_mr(const RindlerCoefficients& rc,
                                                     double magnitude, double phase) {
    auto u = left_wedge_amplitudes(rc).at(phase);
    for (auto& v : u) v *= magnitude;
    return u;
}

inline std::vector<cplx> per_frequency_amplitudes_rdr(const DelayedOverlap& ov, double magnitude,
                                                      double phase) {
    auto u = left_wedge_amplitudes(ov).at(phase);
    for (auto& v : u) v *= magnitude;
    return u;
}

namespace detail {

inline cplx inner(const FrequencyGrid& g, const std::vector<cplx>& x, const std::vector<cplx>& y) {
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) s += g.weights[i] * std::conj(x[i]) * y[i];
    return s;
}

struct VarianceKernel {
    std::vector<double> v;  // 1 + 2 sinh^2 r_i per node
    explicit VarianceKernel(const FrequencyGrid& g, Acceleration acc) : v(g.size()) {
        for (std::size_t i = 0; i < g.size(); ++i)
            v[i] = 1.0 + 2.0 * thermal_occupation(g.nodes[i], acc);
    }
};

inline double variance_at(const FrequencyGrid& g, const VarianceKernel& vk,
                          const std::vector<cplx>& u, double norm2) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) s += g.weights[i] * vk.v[i] * std::norm(u[i]);
    return s / norm2;
}

}  // namespace detail

// Sweep all three schemes over the detection-phase grid.
inline HomodyneSweep homodyne_sweep(const LeftWedgeAmplitudes& am, double beta_mag, double psi,
                                    const std::vector<double>& phi_grid, Acceleration acc,
                                    Scenario scenario) {
    if (!(beta_mag >= 0.0)) throw std::domain_error("homodyne_sweep: |beta| must be >= 0");
    const FrequencyGrid& g = am.grid;
    const detail::VarianceKernel vk(g, acc);

    const std::vector<cplx> u0 = am.at(0.0);
    const std::vector<cplx> upsi = am.at(psi);
    const double n0 = std::sqrt(std::real(detail::inner(g, u0, u0)));
    const double npsi = std::sqrt(std::real(detail::inner(g, upsi, upsi)));
    if (!(n0 > 0.0) || !(npsi > 0.0))
        throw std::runtime_error(
            "homodyne_sweep: signal is orthogonal to the observed wedge (vanishing normalizer)");

    HomodyneSweep sw;
    for (auto* tr : {&sw.balanced, &sw.self_homodyne, &sw.ideal}) {
        tr->scenario = scenario;
        tr->phi = phi_grid;
        tr->X.resize(phi_grid.size());
        tr->V.resize(phi_grid.size());
    }
    sw.balanced.scheme = HomodyneScheme::balanced;
    sw.self_homodyne.scheme = HomodyneScheme::self;
    sw.ideal.scheme = HomodyneScheme::ideal;

    // Balanced and ideal references do not move with phi.
    const cplx ov_bal = detail::inner(g, u0, upsi);
    const double v_bal = detail::variance_at(g, vk, u0, n0 * n0);
    const double v_ideal = detail::variance_at(g, vk, upsi, npsi * npsi);
    const double x_ideal_amp = 2.0 * beta_mag * npsi;

    for (std::size_t p = 0; p < phi_grid.size(); ++p) {
        const double phi = phi_grid[p];
        const cplx emiphi = std::polar(1.0, -phi);

        sw.balanced.X[p] = 2.0 * beta_mag * std::real(emiphi * ov_bal) / n0;
        sw.balanced.V[p] = v_bal;

        const std::vector<cplx> uphi = am.at(phi);
        const double nphi2 = std::real(detail::inner(g, uphi, uphi));
        const double nphi = std::sqrt(nphi2);
        if (!(nphi > 0.0))
            throw std::runtime_error("homodyne_sweep: vanishing self-homodyne normalizer at phi = " +
                                     std::to_string(phi));
        sw.self_homodyne.X[p] = 2.0 * beta_mag * std::real(detail::inner(g, uphi, upsi)) / nphi;
        sw.self_homodyne.V[p] = detail::variance_at(g, vk, uphi, nphi2);

        sw.ideal.X[p] = x_ideal_amp * std::cos(phi);
        sw.ideal.V[p] = v_ideal;
    }
    return sw;
}

inline HomodyneSweep sweep_mr(const RindlerCoefficients& rc, double beta_mag, double psi,
                              const std::vector<double>& phi_grid, Acceleration acc) {
    return homodyne_sweep(left_wedge_amplitudes(rc), beta_mag, psi, phi_grid, acc,
                          Scenario::minkowski_to_rindler);
}

inline HomodyneSweep sweep_rdr(const DelayedOverlap& ov, double beta_mag, double psi,
                               const std::vector<double>& phi_grid, Acceleration acc) {
    return homodyne_sweep(left_wedge_amplitudes(ov), beta_mag, psi, phi_grid, acc,
                          Scenario::rindler_to_delayed);
}

// Uniform phase grid on [0, 2 pi).
inline std::vector<double> phase_grid(std::size_t n_phi) {
    if (n_phi < 4) throw std::invalid_argument("phase_grid: need at least 4 nodes");
    std::vector<double> phi(n_phi);
    for (std::size_t i = 0; i < n_phi; ++i)
        phi[i] = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_phi);
    return phi;
}

}  // namespace rqo
