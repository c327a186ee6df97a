// Basis transformation of displacement operators.
//
// A normalized bosonic operator O decomposed over a two-wedge continuum
// basis, O = sum_n int dm (Oa_n ô_{n,m} + Ob_n ô†_{n,m}), turns the single
// displacement D_O(alpha) into a product of one displacement per wedge:
//   c_n(m)   = Oa_n(m) alpha* - Ob_n(m)* alpha
//   alpha_n  = || c_n ||_2           (grid norm)
//   weight_n = c_n / alpha_n         (unit-norm mode profile)
// A wedge with alpha_n = 0 contributes the identity. The per-mode shift of
// ô_{n,m} under D_O(alpha) is conj(c_n(m)).
//
// The two specializations fill the decomposition from the scenario
// coefficient arrays: Minkowski -> Rindler from (f_ea, f_eac | f_eb, f_ebc),
// Rindler -> delayed Rindler from the packet-contracted delayed arrays
// (alpha_a_g*, -beta_a_g | alpha_b_g*, -beta_b_g).

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "rqo/delayed_rindler.hpp"
#include "rqo/frequency_grid.hpp"
#include "rqo/minkowski_rindler.hpp"

namespace rqo {

enum class Wedge : int { right = 0, left = 1 };

struct BosonicDecomposition {
    FrequencyGrid grid;
    // Annihilation-part (Oa) and creation-part (Ob) coefficients per wedge.
    std::array<std::vector<cplx>, 2> annihilation;
    std::array<std::vector<cplx>, 2> creation;

    double commutator_sum() const {
        double s = 0.0;
        for (int n = 0; n < 2; ++n)
            for (std::size_t i = 0; i < grid.size(); ++i)
                s += grid.weights[i] * (std::norm(annihilation[n][i]) - std::norm(creation[n][i]));
        return s;
    }
};

struct WedgeDisplacement {
    double amplitude = 0.0;
    std::vector<cplx> mode_weights;  // empty <=> identity displacement

    bool is_identity() const { return mode_weights.empty(); }
};

struct TransformedDisplacement {
    FrequencyGrid grid;
    double input_magnitude = 0.0;
    double input_phase = 0.0;
    std::array<WedgeDisplacement, 2> wedge;

    const WedgeDisplacement& operator[](Wedge n) const { return wedge[static_cast<int>(n)]; }
};

// Amplitude below this fraction of |alpha| collapses a wedge to the identity.
inline constexpr double kIdentityThreshold = 1e-12;

inline TransformedDisplacement transform_displacement(const BosonicDecomposition& decomp,
                                                      cplx alpha,
                                                      double commutator_tol = 1e-3) {
    decomp.grid.validate();
    const std::size_t n = decomp.grid.size();
    for (int w = 0; w < 2; ++w)
        if (decomp.annihilation[w].size() != n || decomp.creation[w].size() != n)
            throw std::invalid_argument("transform_displacement: coefficient arrays must match the grid");
    const double resid = std::abs(decomp.commutator_sum() - 1.0);
    if (resid > commutator_tol)
        throw std::invalid_argument("transform_displacement: decomposition commutator sum off by " +
                                    std::to_string(resid));

    TransformedDisplacement out;
    out.grid = decomp.grid;
    out.input_magnitude = std::abs(alpha);
    out.input_phase = std::arg(alpha);

    const cplx ac = std::conj(alpha);
    for (int w = 0; w < 2; ++w) {
        std::vector<cplx> c(n);
        double norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = decomp.annihilation[w][i] * ac - std::conj(decomp.creation[w][i]) * alpha;
            norm2 += decomp.grid.weights[i] * std::norm(c[i]);
        }
        const double amp = std::sqrt(norm2);
        if (amp <= kIdentityThreshold * std::abs(alpha) || std::abs(alpha) == 0.0) {
            out.wedge[w] = WedgeDisplacement{};  // identity
            continue;
        }
        for (auto& v : c) v /= amp;
        out.wedge[w] = WedgeDisplacement{amp, std::move(c)};
    }
    return out;
}

namespace detail {

inline TransformedDisplacement from_wedge_arrays(const FrequencyGrid& grid,
                                                 const std::vector<cplx>& oa_r,
                                                 const std::vector<cplx>& ob_r,
                                                 const std::vector<cplx>& oa_l,
                                                 const std::vector<cplx>& ob_l, double magnitude,
                                                 double phase) {
    TransformedDisplacement out;
    out.grid = grid;
    out.input_magnitude = magnitude;
    out.input_phase = phase;
    const cplx em = std::polar(1.0, -phase);
    const cplx ep = std::polar(1.0, phase);
    const std::array<const std::vector<cplx>*, 2> oa{&oa_r, &oa_l};
    const std::array<const std::vector<cplx>*, 2> ob{&ob_r, &ob_l};
    for (int w = 0; w < 2; ++w) {
        std::vector<cplx> c(grid.size());
        double norm2 = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            c[i] = magnitude * ((*oa[w])[i] * em - std::conj((*ob[w])[i]) * ep);
            norm2 += grid.weights[i] * std::norm(c[i]);
        }
        const double amp = std::sqrt(norm2);
        if (amp <= kIdentityThreshold * magnitude || magnitude == 0.0) {
            out.wedge[w] = WedgeDisplacement{};
            continue;
        }
        for (auto& v : c) v /= amp;
        out.wedge[w] = WedgeDisplacement{amp, std::move(c)};
    }
    return out;
}

}  // namespace detail

// D_{e_f}(|alpha| e^{i phi}) in the Rindler frame: right wedge from
// (f_ea, f_eac), left wedge from (f_eb, f_ebc).
inline TransformedDisplacement minkowski_to_rindler_displacement(const RindlerCoefficients& rc,
                                                                 double magnitude, double phase) {
    if (!(magnitude >= 0.0))
        throw std::domain_error("minkowski_to_rindler_displacement: magnitude must be >= 0");
    return detail::from_wedge_arrays(rc.grid, rc.f_ea, rc.f_eac, rc.f_eb, rc.f_ebc, magnitude,
                                     phase);
}

// D_{a_g}(|alpha| e^{i phi}) in the delayed-Rindler frame. Per the delayed
// decomposition, the wedge coefficient pairs are (alpha_a_g*, -beta_a_g) and
// (alpha_b_g*, -beta_b_g).
inline TransformedDisplacement rindler_to_delayed_displacement(const DelayedOverlap& ov,
                                                               double magnitude, double phase) {
    if (!(magnitude >= 0.0))
        throw std::domain_error("rindler_to_delayed_displacement: magnitude must be >= 0");
    const std::size_t n = ov.grid_obs.size();
    std::vector<cplx> oa_r(n), ob_r(n), oa_l(n), ob_l(n);
    for (std::size_t i = 0; i < n; ++i) {
        oa_r[i] = std::conj(ov.alpha_a_g[i]);
        ob_r[i] = -ov.beta_a_g[i];
        oa_l[i] = std::conj(ov.alpha_b_g[i]);
        ob_l[i] = -ov.beta_b_g[i];
    }
    return detail::from_wedge_arrays(ov.grid_obs, oa_r, ob_r, oa_l, ob_l, magnitude, phase);
}

// Decomposition builders matching the specialized transforms, for the
// generic-path cross-check.
inline BosonicDecomposition decomposition_from_rindler(const RindlerCoefficients& rc) {
    BosonicDecomposition d;
    d.grid = rc.grid;
    d.annihilation[static_cast<int>(Wedge::right)] = rc.f_ea;
    d.creation[static_cast<int>(Wedge::right)] = rc.f_eac;
    d.annihilation[static_cast<int>(Wedge::left)] = rc.f_eb;
    d.creation[static_cast<int>(Wedge::left)] = rc.f_ebc;
    return d;
}

inline BosonicDecomposition decomposition_from_delayed(const DelayedOverlap& ov) {
    BosonicDecomposition d;
    d.grid = ov.grid_obs;
    const std::size_t n = ov.grid_obs.size();
    d.annihilation[0].resize(n);
    d.creation[0].resize(n);
    d.annihilation[1].resize(n);
    d.creation[1].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.annihilation[0][i] = std::conj(ov.alpha_a_g[i]);
        d.creation[0][i] = -ov.beta_a_g[i];
        d.annihilation[1][i] = std::conj(ov.alpha_b_g[i]);
        d.creation[1][i] = -ov.beta_b_g[i];
    }
    return d;
}

}  // namespace rqo
