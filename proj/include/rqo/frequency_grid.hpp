// Frequency grids with quadrature weights.
//
// Continuum mode labels (Minkowski k, Rindler omega) are discretized on
// strictly increasing node sets carrying positive quadrature weights, so that
// sum_i w_i f(x_i) approximates the integral of f over [x_min, x_max].
// Two builders are provided:
//   - log_spaced: trapezoidal rule in log(x), suited to integrands spread
//     over several decades (Rindler spectra).
//   - oscillatory_log_axis: panels of 16-point Gauss-Legendre in u = log(x/a),
//     with panel width capped so that a phase factor e^{i nu u} rotates by at
//     most ~4 radians per half panel. Used for the Fourier-type overlap
//     integrals where trapezoid sampling would alias.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rqo {

struct FrequencyGrid {
    std::vector<double> nodes;    // strictly increasing, all > 0
    std::vector<double> weights;  // quadrature weights, all > 0
    double omega_min = 0.0;
    double omega_max = 0.0;

    std::size_t size() const { return nodes.size(); }

    void validate() const {
        if (nodes.empty() || nodes.size() != weights.size())
            throw std::invalid_argument("FrequencyGrid: empty or mismatched nodes/weights");
        double prev = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (!(nodes[i] > prev))
                throw std::invalid_argument("FrequencyGrid: nodes must be positive and strictly increasing");
            if (!(weights[i] > 0.0))
                throw std::invalid_argument("FrequencyGrid: weights must be positive");
            prev = nodes[i];
        }
        if (!(omega_min > 0.0) || !(omega_max >= nodes.back()) || !(omega_min <= nodes.front()))
            throw std::invalid_argument("FrequencyGrid: bounds must satisfy 0 < omega_min <= nodes <= omega_max");
    }

    // Trapezoid in v = log(omega): integral f(w) dw = integral f(e^v) e^v dv.
    static FrequencyGrid log_spaced(double omega_min, double omega_max, std::size_t n) {
        if (!(omega_min > 0.0) || !(omega_max > omega_min))
            throw std::invalid_argument("log_spaced: need 0 < omega_min < omega_max");
        if (n < 2) throw std::invalid_argument("log_spaced: need at least 2 nodes");
        FrequencyGrid g;
        g.omega_min = omega_min;
        g.omega_max = omega_max;
        g.nodes.resize(n);
        g.weights.resize(n);
        const double v0 = std::log(omega_min);
        const double h = (std::log(omega_max) - v0) / static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            const double w = (i == 0) ? omega_min
                           : (i == n - 1) ? omega_max
                                          : std::exp(v0 + h * static_cast<double>(i));
            g.nodes[i] = w;
            g.weights[i] = w * h * ((i == 0 || i == n - 1) ? 0.5 : 1.0);
        }
        return g;
    }

    // Uniform trapezoid in omega itself.
    static FrequencyGrid linear(double omega_min, double omega_max, std::size_t n) {
        if (!(omega_min > 0.0) || !(omega_max > omega_min))
            throw std::invalid_argument("linear: need 0 < omega_min < omega_max");
        if (n < 2) throw std::invalid_argument("linear: need at least 2 nodes");
        FrequencyGrid g;
        g.omega_min = omega_min;
        g.omega_max = omega_max;
        g.nodes.resize(n);
        g.weights.resize(n);
        const double h = (omega_max - omega_min) / static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            g.nodes[i] = (i == n - 1) ? omega_max : omega_min + h * static_cast<double>(i);
            g.weights[i] = h * ((i == 0 || i == n - 1) ? 0.5 : 1.0);
        }
        return g;
    }
};

namespace detail {

inline constexpr double kGL16Nodes[16] = {
    -0.98940093499164993260, -0.94457502307323257608, -0.86563120238783174388,
    -0.75540440835500303390, -0.61787624440264374845, -0.45801677765722738634,
    -0.28160355077925891323, -0.09501250983763744019, 0.09501250983763744019,
    0.28160355077925891323,  0.45801677765722738634,  0.61787624440264374845,
    0.75540440835500303390,  0.86563120238783174388,  0.94457502307323257608,
    0.98940093499164993260};

inline constexpr double kGL16Weights[16] = {
    0.02715245941175409485, 0.06225352393864789286, 0.09515851168249278481,
    0.12462897125553387205, 0.14959598881657673208, 0.16915651939500253819,
    0.18260341504492358887, 0.18945061045506849629, 0.18945061045506849629,
    0.18260341504492358887, 0.16915651939500253819, 0.14959598881657673208,
    0.12462897125553387205, 0.09515851168249278481, 0.06225352393864789286,
    0.02715245941175409485};

}  // namespace detail

// Gauss-Legendre panel rule on k in [k_lo, k_hi], built in u = log(k).
// max_phase_rate bounds |d(phase)/du| of the integrands this axis will see;
// the panel width is capped at 8/max_phase_rate so GL-16 resolves the
// oscillation with large margin. Weights are d k = k du measures: summing
// weights[i] * f(nodes[i]) approximates integral f(k) dk.
inline FrequencyGrid oscillatory_log_axis(double k_lo, double k_hi, double max_phase_rate,
                                          double refine = 1.0) {
    if (!(k_lo > 0.0) || !(k_hi > k_lo))
        throw std::invalid_argument("oscillatory_log_axis: need 0 < k_lo < k_hi");
    if (!(refine > 0.0)) throw std::invalid_argument("oscillatory_log_axis: refine must be > 0");
    const double u_lo = std::log(k_lo), u_hi = std::log(k_hi);
    const double span = u_hi - u_lo;
    double h_max = 8.0 / std::max(max_phase_rate, 1.0) / refine;
    h_max = std::min(h_max, 0.5 / refine);
    const auto n_panels = static_cast<std::size_t>(std::ceil(span / h_max));
    const double h = span / static_cast<double>(n_panels);

    FrequencyGrid g;
    g.omega_min = k_lo;
    g.omega_max = k_hi;
    g.nodes.reserve(16 * n_panels);
    g.weights.reserve(16 * n_panels);
    for (std::size_t p = 0; p < n_panels; ++p) {
        const double uc = u_lo + h * (static_cast<double>(p) + 0.5);
        for (int q = 0; q < 16; ++q) {
            const double u = uc + 0.5 * h * detail::kGL16Nodes[q];
            const double k = std::exp(u);
            g.nodes.push_back(k);
            g.weights.push_back(0.5 * h * detail::kGL16Weights[q] * k);
        }
    }
    return g;
}

}  // namespace rqo
