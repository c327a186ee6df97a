// Displacement-operator basis transformation.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "rqo/displacement.hpp"
#include "rqo/frequency_grid.hpp"
#include "rqo/minkowski_rindler.hpp"
#include "rqo/wavepacket.hpp"

using rqo::Acceleration;
using rqo::cplx;
using rqo::FrequencyGrid;
using rqo::Wedge;

namespace {

FrequencyGrid two_node_grid() {
    FrequencyGrid g;
    g.nodes = {1.0, 2.0};
    g.weights = {1.0, 1.0};
    g.omega_min = 1.0;
    g.omega_max = 2.0;
    return g;
}

rqo::RindlerCoefficients fig7_rindler(double omega_lo = 1e-6) {
    const Acceleration acc(1.0);
    const auto wp = rqo::make_gaussian(1.0, 0.2, 1.0, rqo::oscillatory_log_axis(1e-4, 2.6, 25.0));
    const auto grid = FrequencyGrid::log_spaced(omega_lo, 20.0, 1024);
    return rqo::rindler_coefficients(rqo::unruh_overlap(wp, grid, acc), acc);
}

}  // namespace

TEST_CASE("transform_displacement: single-mode identity decomposition") {
    rqo::BosonicDecomposition d;
    d.grid = two_node_grid();
    d.annihilation[0] = {cplx(1.0, 0.0), cplx(0.0, 0.0)};
    d.creation[0] = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
    d.annihilation[1] = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
    d.creation[1] = {cplx(0.0, 0.0), cplx(0.0, 0.0)};

    const double phi = 0.9;
    const auto td = rqo::transform_displacement(d, std::polar(2.5, phi));
    CHECK(td[Wedge::right].amplitude == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(td[Wedge::left].is_identity());
    // The phase moves into the mode weight as e^{-i phi}.
    CHECK(std::arg(td[Wedge::right].mode_weights[0]) == doctest::Approx(-phi).epsilon(1e-14));
}

TEST_CASE("transform_displacement: zero displacement gives identity everywhere") {
    rqo::BosonicDecomposition d;
    d.grid = two_node_grid();
    d.annihilation[0] = {cplx(1.0, 0.0), cplx(0.0, 0.0)};
    d.creation[0] = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
    d.annihilation[1] = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
    d.creation[1] = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
    const auto td = rqo::transform_displacement(d, cplx(0.0, 0.0));
    CHECK(td[Wedge::right].is_identity());
    CHECK(td[Wedge::left].is_identity());
}

TEST_CASE("transform_displacement: two-mode-squeeze decomposition splits cosh/sinh") {
    const double s = 0.8;
    rqo::BosonicDecomposition d;
    d.grid = two_node_grid();
    d.annihilation[0] = {cplx(std::cosh(s), 0.0), cplx(0.0, 0.0)};
    d.creation[0] = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
    d.annihilation[1] = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
    d.creation[1] = {cplx(0.0, 0.0), cplx(std::sinh(s), 0.0)};

    const double amp = 1.7;
    const auto td = rqo::transform_displacement(d, cplx(amp, 0.0));
    CHECK(td[Wedge::right].amplitude == doctest::Approx(amp * std::cosh(s)).epsilon(1e-13));
    CHECK(td[Wedge::left].amplitude == doctest::Approx(amp * std::sinh(s)).epsilon(1e-13));
}

TEST_CASE("transform_displacement: rejects a non-normalized decomposition") {
    rqo::BosonicDecomposition d;
    d.grid = two_node_grid();
    d.annihilation[0] = {cplx(2.0, 0.0), cplx(0.0, 0.0)};  // commutator sum = 4
    d.creation[0] = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
    d.annihilation[1] = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
    d.creation[1] = {cplx(0.0, 0.0), cplx(0.0, 0.0)};
    CHECK_THROWS_AS(rqo::transform_displacement(d, cplx(1.0, 0.0)), std::invalid_argument);
}

TEST_CASE("minkowski_to_rindler_displacement: weights unit norm, phase periodicity") {
    const auto rc = fig7_rindler();
    const auto td = rqo::minkowski_to_rindler_displacement(rc, 1.0, 0.7);

    for (Wedge w : {Wedge::right, Wedge::left}) {
        REQUIRE(!td[w].is_identity());
        double n2 = 0.0;
        for (std::size_t i = 0; i < rc.grid.size(); ++i)
            n2 += rc.grid.weights[i] * std::norm(td[w].mode_weights[i]);
        CHECK(n2 == doctest::Approx(1.0).epsilon(1e-12));
    }

    // alpha_n(phi + pi) = alpha_n(phi), weights flip sign.
    const auto td_pi = rqo::minkowski_to_rindler_displacement(rc, 1.0, 0.7 + std::numbers::pi);
    for (Wedge w : {Wedge::right, Wedge::left}) {
        CHECK(td_pi[w].amplitude == doctest::Approx(td[w].amplitude).epsilon(1e-12));
        for (std::size_t i = 0; i < rc.grid.size(); i += 211)
            CHECK(std::abs(td_pi[w].mode_weights[i] + td[w].mode_weights[i]) < 1e-10);
    }
}

TEST_CASE("creation-free decomposition: amplitude independent of phase, weights ~ e^{-i phi}") {
    auto rc = fig7_rindler();
    std::fill(rc.f_eac.begin(), rc.f_eac.end(), cplx(0.0, 0.0));
    std::fill(rc.f_ebc.begin(), rc.f_ebc.end(), cplx(0.0, 0.0));

    const auto t0 = rqo::minkowski_to_rindler_displacement(rc, 1.0, 0.0);
    const auto t1 = rqo::minkowski_to_rindler_displacement(rc, 1.0, 1.1);
    CHECK(t1[Wedge::right].amplitude == doctest::Approx(t0[Wedge::right].amplitude).epsilon(1e-12));
    CHECK(t1[Wedge::left].amplitude == doctest::Approx(t0[Wedge::left].amplitude).epsilon(1e-12));
    for (std::size_t i = 0; i < rc.grid.size(); i += 173) {
        const cplx expect = t0[Wedge::left].mode_weights[i] * std::polar(1.0, -1.1);
        CHECK(std::abs(t1[Wedge::left].mode_weights[i] - expect) < 1e-12);
    }
}

TEST_CASE("generic and specialized displacement paths agree") {
    const auto rc = fig7_rindler();
    const double mag = 1.3, phi = 2.1;
    const auto specialized = rqo::minkowski_to_rindler_displacement(rc, mag, phi);
    const auto generic =
        rqo::transform_displacement(rqo::decomposition_from_rindler(rc), std::polar(mag, phi), 1e-3);
    for (Wedge w : {Wedge::right, Wedge::left}) {
        CHECK(std::abs(specialized[w].amplitude - generic[w].amplitude) <=
              1e-12 * generic[w].amplitude);
        for (std::size_t i = 0; i < rc.grid.size(); i += 311)
            CHECK(std::abs(specialized[w].mode_weights[i] - generic[w].mode_weights[i]) < 1e-12);
    }
}

TEST_CASE("rindler_to_delayed_displacement: unit weights and small-delay split") {
    const Acceleration acc(1.0);
    const auto src = FrequencyGrid::log_spaced(1e-4, 2.1, 256);
    const auto g = rqo::make_gaussian(0.5, 0.2, 2.5, src);
    const auto obs = FrequencyGrid::log_spaced(1e-4, 50.0, 512);

    const auto ov = rqo::delayed_overlap(g, obs, 2.5, acc);
    const auto td = rqo::rindler_to_delayed_displacement(ov, 1.0, 0.3);
    for (Wedge w : {Wedge::right, Wedge::left}) {
        REQUIRE(!td[w].is_identity());
        double n2 = 0.0;
        for (std::size_t i = 0; i < obs.size(); ++i)
            n2 += obs.weights[i] * std::norm(td[w].mode_weights[i]);
        CHECK(n2 == doctest::Approx(1.0).epsilon(1e-12));
    }

    // Small delay: the right (undelayed-like) wedge keeps most of the
    // amplitude, the left wedge fades.
    const auto ov_small = rqo::delayed_overlap(g, obs, 1e-5, acc);
    const auto td_small = rqo::rindler_to_delayed_displacement(ov_small, 1.0, 0.3);
    CHECK(td_small[Wedge::right].amplitude > 0.9);
    CHECK(td_small[Wedge::left].amplitude < 0.5 * td[Wedge::left].amplitude);
}
