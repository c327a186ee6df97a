// Gaussian wavepacket mode profiles.
//
// One closed-form family serves both scenarios:
//   f(k; k0, sigma, V0) = A sqrt(k) (2 pi sigma^2)^{-1/4}
//                         exp(-(k - k0)^2 / (4 sigma^2) - i k V0)
// in Minkowski frequency, and the same shape with (omega0, delta, v0) in
// Rindler frequency. The normalization constant is fixed numerically so the
// quadrature of |f|^2 over the packet's own grid equals 1; using the same
// grid later for overlap integrals cancels the discretization error of the
// norm to first order.
//
// The profile is treated as zero outside [max(grid lower edge, c - 8 w),
// c + 8 w]; the Gaussian tail is below 1e-14 of peak there.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "rqo/frequency_grid.hpp"
#include "rqo/special_functions.hpp"

namespace rqo {

struct GaussianWavePacket {
    double center = 0.0;   // k0 or omega0
    double width = 0.0;    // sigma or delta
    double offset = 0.0;   // V0 or v0 (null-coordinate offset, phase only)
    double norm_const = 0.0;
    double support_lo = 0.0;
    double support_hi = 0.0;
    FrequencyGrid grid;  // normalization / overlap grid

    // Un-normalized shape, zero outside the truncation support.
    cplx shape(double k) const {
        if (!(k > 0.0)) throw std::domain_error("GaussianWavePacket: k must be positive");
        if (k < support_lo || k > support_hi) return cplx(0.0, 0.0);
        const double d = (k - center) / (2.0 * width);
        const double mag = std::sqrt(k) * std::pow(2.0 * std::numbers::pi * width * width, -0.25) * std::exp(-d * d);
        const double ph = -k * offset;
        return cplx(mag * std::cos(ph), mag * std::sin(ph));
    }

    cplx evaluate(double k) const { return norm_const * shape(k); }

    // Quadrature of |f|^2 over the carried grid.
    double norm_squared() const {
        double s = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const cplx v = evaluate(grid.nodes[i]);
            s += grid.weights[i] * std::norm(v);
        }
        return s;
    }

    static double support_lo_for(double center, double width, double grid_lo) {
        return std::max(grid_lo, center - 8.0 * width);
    }
    static double support_hi_for(double center, double width) { return center + 8.0 * width; }
};

inline GaussianWavePacket make_gaussian(double center, double width, double offset,
                                        const FrequencyGrid& grid) {
    if (!(center > 0.0)) throw std::domain_error("make_gaussian: center must be positive");
    if (!(width > 0.0)) throw std::domain_error("make_gaussian: width must be positive");
    grid.validate();

    GaussianWavePacket wp;
    wp.center = center;
    wp.width = width;
    wp.offset = offset;
    wp.grid = grid;
    wp.support_lo = GaussianWavePacket::support_lo_for(center, width, grid.omega_min);
    wp.support_hi = GaussianWavePacket::support_hi_for(center, width);

    double s = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        s += grid.weights[i] * std::norm(wp.shape(grid.nodes[i]));
    if (!(s > 0.0)) throw std::domain_error("make_gaussian: profile has no support on the grid");
    wp.norm_const = 1.0 / std::sqrt(s);
    return wp;
}

}  // namespace rqo
