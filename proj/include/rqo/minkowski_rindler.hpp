// Bogoliubov coefficients linking a Minkowski wavepacket mode to
// single-frequency Unruh and Rindler modes.
//
//   A_{k w} = i sqrt(2 sinh(pi w/a)) / (2 pi sqrt(w k)) Gamma(1 - i w/a) (k/a)^{i w/a}
//           = Z_w k^{-1/2} (k/a)^{i w/a},          B_{k w} = conj(A_{k w})
//
// Packet overlaps A_w = int dk A_{k w} f(k) are Fourier-type after k = a e^u:
//   A_w = Z_w sqrt(a) int du e^{u/2} f(a e^u) e^{i w u / a}
// evaluated on the packet's Gauss-Legendre panel axis (see
// oscillatory_log_axis); naive uniform-in-k sampling aliases once w/a is
// large. The summation order is the axis order, so results are bit-stable.
//
// Rindler coefficients follow by the two-mode squeezing relation:
//   f_ea = A_w cosh r_w   f_eac = -B_w sinh r_w
//   f_eb = B_w cosh r_w   f_ebc = -A_w sinh r_w

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rqo/frequency_grid.hpp"
#include "rqo/special_functions.hpp"
#include "rqo/wavepacket.hpp"

namespace rqo {

// Single-frequency coefficient A_{k w}; the companion is its conjugate.
inline cplx a_k_omega(double k, double omega, Acceleration acc) {
    if (!(k > 0.0)) throw std::domain_error("a_k_omega: k must be positive");
    return z_factor(omega, acc) / std::sqrt(k) *
           std::polar(1.0, (omega / acc.a) * std::log(k / acc.a));
}

struct UnruhOverlap {
    FrequencyGrid grid;       // omega grid the arrays live on
    std::vector<cplx> A, B;   // A_w, B_w

    // Quadrature of |A|^2 + |B|^2; equals 1 for a complete decomposition of
    // a normalized packet.
    double completeness() const {
        double s = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            s += grid.weights[i] * (std::norm(A[i]) + std::norm(B[i]));
        return s;
    }
};

// A_w, B_w for every node of omega_grid. The packet's own axis is the k
// quadrature; it must resolve the fastest phase this call will see.
inline UnruhOverlap unruh_overlap(const GaussianWavePacket& wp, const FrequencyGrid& omega_grid,
                                  Acceleration acc) {
    omega_grid.validate();
    const FrequencyGrid& kax = wp.grid;

    // Sampling check: adjacent nodes must stay well inside an oscillation of
    // the total phase w u / a + k V0.
    const double rate = omega_grid.omega_max / acc.a + kax.omega_max * std::abs(wp.offset);
    double max_step = 0.0;
    for (std::size_t i = 0; i + 1 < kax.size(); ++i)
        max_step = std::max(max_step, std::log(kax.nodes[i + 1] / kax.nodes[i]));
    if (max_step * rate > 1.5)
        throw std::runtime_error(
            "unruh_overlap: k axis too coarse for requested frequencies (phase step " +
            std::to_string(max_step * rate) + " rad)");

    // Envelope w_i e^{u_i/2} f(a e^{u_i}) sqrt(a) with k_i = a e^{u_i}:
    // w_i is a dk measure, so the factor reduces to w_i f(k_i) / sqrt(k_i).
    std::vector<double> u(kax.size());
    std::vector<cplx> env(kax.size());
    for (std::size_t i = 0; i < kax.size(); ++i) {
        const double k = kax.nodes[i];
        u[i] = std::log(k / acc.a);
        env[i] = kax.weights[i] * wp.evaluate(k) / std::sqrt(k);
    }

    UnruhOverlap out;
    out.grid = omega_grid;
    out.A.resize(omega_grid.size());
    out.B.resize(omega_grid.size());
    for (std::size_t j = 0; j < omega_grid.size(); ++j) {
        const double x = omega_grid.nodes[j] / acc.a;
        cplx sp(0.0, 0.0), sm(0.0, 0.0);
        for (std::size_t i = 0; i < kax.size(); ++i) {
            const cplx ph = std::polar(1.0, x * u[i]);
            sp += env[i] * ph;
            sm += env[i] * std::conj(ph);
        }
        const cplx Z = z_factor(omega_grid.nodes[j], acc);
        out.A[j] = Z * sp;
        out.B[j] = std::conj(Z) * sm;
    }
    return out;
}

struct RindlerCoefficients {
    FrequencyGrid grid;
    std::vector<cplx> f_ea, f_eac, f_eb, f_ebc;

    // Quadrature of |f_ea|^2 - |f_eac|^2 + |f_eb|^2 - |f_ebc|^2 (unit for a
    // normalized mode on a grid covering the full spectral support).
    double commutator_sum() const {
        double s = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            s += grid.weights[i] * (std::norm(f_ea[i]) - std::norm(f_eac[i]) +
                                    std::norm(f_eb[i]) - std::norm(f_ebc[i]));
        return s;
    }
};

inline RindlerCoefficients rindler_coefficients(const UnruhOverlap& uo, Acceleration acc) {
    RindlerCoefficients rc;
    rc.grid = uo.grid;
    const std::size_t n = uo.grid.size();
    if (uo.A.size() != n || uo.B.size() != n)
        throw std::invalid_argument("rindler_coefficients: arrays and grid must share a shape");
    rc.f_ea.resize(n);
    rc.f_eac.resize(n);
    rc.f_eb.resize(n);
    rc.f_ebc.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double e = std::exp(-std::numbers::pi * uo.grid.nodes[i] / acc.a);
        const double ch = 1.0 / std::sqrt(-std::expm1(-2.0 * std::numbers::pi * uo.grid.nodes[i] / acc.a));
        const double sh = e * ch;
        rc.f_ea[i] = uo.A[i] * ch;
        rc.f_eac[i] = -uo.B[i] * sh;
        rc.f_eb[i] = uo.B[i] * ch;
        rc.f_ebc[i] = -uo.A[i] * sh;
    }
    return rc;
}

}  // namespace rqo
