// Gaussian-state simulator: symplectic algebra, photon statistics, and the
// same-frame homodyne limits where every scheme has a closed form.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "rqo/gaussian_state.hpp"
#include "rqo/oracle.hpp"

using rqo::Acceleration;
using rqo::cplx;
using rqo::FrequencyGrid;
using rqo::GaussianState;

namespace {
FrequencyGrid single_mode_grid(double omega = 30.0) {
    FrequencyGrid g;
    g.nodes = {omega};
    g.weights = {1.0};
    g.omega_min = omega;
    g.omega_max = omega;
    return g;
}
}  // namespace

TEST_CASE("factory operators are symplectic to 1e-10") {
    CHECK(rqo::phase_shift_op(3, {0, 2}, 0.7).symplectic_residual() < 1e-12);
    CHECK(rqo::balanced_beam_splitter_op(4, {{0, 2}, {1, 3}}).symplectic_residual() < 1e-12);
    CHECK(rqo::two_mode_squeeze_op(4, {{0, 2, 0.9}, {1, 3, 0.4}}).symplectic_residual() < 1e-12);

    // Bogoliubov route: the same two-mode squeeze through U, W matrices.
    Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(2, 2), W = Eigen::MatrixXcd::Zero(2, 2);
    U(0, 0) = std::cosh(0.9);
    U(1, 1) = std::cosh(0.9);
    W(0, 1) = std::sinh(0.9);
    W(1, 0) = std::sinh(0.9);
    const auto op = rqo::bogoliubov_symplectic(U, W);
    CHECK(op.symplectic_residual() < 1e-12);
    const auto direct = rqo::two_mode_squeeze_op(2, {{0, 1, 0.9}});
    CHECK((op.S - direct.S).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("apply: identity, displacement, composition, uncertainty") {
    const GaussianState vac = rqo::vacuum_state(2);
    const auto id = rqo::identity_op(2);
    auto st = rqo::apply(vac, id);
    CHECK((st.mean - vac.mean).cwiseAbs().maxCoeff() == 0.0);
    CHECK((st.cov - vac.cov).cwiseAbs().maxCoeff() == 0.0);

    const auto disp = rqo::displacement_op({cplx(0.5, -0.3), cplx(0.0, 0.0)});
    st = rqo::apply(vac, disp);
    CHECK(st.mean(0) == doctest::Approx(1.0));
    CHECK(st.mean(1) == doctest::Approx(-0.6));
    CHECK((st.cov - vac.cov).cwiseAbs().maxCoeff() == 0.0);

    const auto s1 = rqo::two_mode_squeeze_op(2, {{0, 1, 0.4}});
    const auto s2 = rqo::phase_shift_op(2, {0}, 1.1);
    const auto seq = rqo::apply(rqo::apply(vac, s1), s2);
    rqo::SymplecticOp combined{s2.S * s1.S, s2.S * s1.d + s2.d};
    const auto once = rqo::apply(vac, combined);
    CHECK((seq.cov - once.cov).cwiseAbs().maxCoeff() < 1e-12);

    CHECK(seq.uncertainty_min_eigenvalue() > -1e-9);
    CHECK_THROWS_AS(rqo::apply(rqo::vacuum_state(3), id), std::invalid_argument);
}

TEST_CASE("photon statistics: vacuum, coherent, thermal closed forms") {
    // Vacuum: zero mean and variance.
    const auto vac_stats = rqo::weighted_number_stats(rqo::vacuum_state(1), {1.0});
    CHECK(std::abs(vac_stats.mean) < 1e-14);
    CHECK(std::abs(vac_stats.variance) < 1e-14);

    // Coherent: Poissonian, mean = variance = |gamma|^2.
    const cplx gamma(0.8, -0.5);
    const auto coh = rqo::apply(rqo::vacuum_state(1), rqo::displacement_op({gamma}));
    const auto cs = rqo::weighted_number_stats(coh, {1.0});
    CHECK(cs.mean == doctest::Approx(std::norm(gamma)).epsilon(1e-12));
    CHECK(cs.variance == doctest::Approx(std::norm(gamma)).epsilon(1e-12));

    // Thermal from a traced two-mode squeeze: n = sinh^2 r, var = n(n+1).
    const double r = 0.7;
    const auto tms = rqo::two_mode_squeeze_op(2, {{0, 1, r}});
    const auto both = rqo::apply(rqo::vacuum_state(2), tms);
    const auto th = rqo::partial_trace(both, {0});
    const double nbar = std::sinh(r) * std::sinh(r);
    const auto ts = rqo::weighted_number_stats(th, {1.0});
    CHECK(ts.mean == doctest::Approx(nbar).epsilon(1e-12));
    CHECK(ts.variance == doctest::Approx(nbar * (nbar + 1.0)).epsilon(1e-12));
}

TEST_CASE("thermal_wedge_state reproduces the Unruh occupation per mode") {
    const Acceleration acc(1.0);
    auto g = FrequencyGrid::log_spaced(0.05, 5.0, 16);
    const auto st = rqo::thermal_wedge_state(g, acc);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto s = rqo::weighted_number_stats(
            st, [&] { std::vector<double> q(g.size(), 0.0); q[i] = 1.0; return q; }());
        CHECK(s.mean == doctest::Approx(rqo::thermal_occupation(g.nodes[i], acc)).epsilon(1e-10));
    }
    CHECK(st.uncertainty_min_eigenvalue() > -1e-9);
}

TEST_CASE("same-frame balanced homodyne: exact coherent-state forms") {
    // One effectively inertial mode (omega/a >> 1 so the thermal part is 0):
    // X(phi) = 2|beta| cos(phi - psi) and V = 1 + |beta|^2/|alpha|^2 exactly.
    const Acceleration acc(1.0);
    rqo::LeftWedgeAmplitudes am;
    am.grid = single_mode_grid();
    am.plus = {cplx(1.0, 0.0)};
    am.minus = {cplx(0.0, 0.0)};

    const double beta = 0.7, psi = 0.9, alpha = 1e3;
    rqo::OracleSettings cfg;
    cfg.lo_amplitude = alpha;
    const std::vector<double> phi{0.0, 0.5, 1.3, 2.2, 4.0};
    const auto tr = rqo::simulate_balanced(am, beta, psi, phi, acc, cfg);
    REQUIRE(tr.strong_oscillator_ok);
    for (std::size_t i = 0; i < phi.size(); ++i) {
        CHECK(tr.X[i] == doctest::Approx(2.0 * beta * std::cos(phi[i] - psi)).epsilon(1e-6));
        CHECK(tr.V[i] == doctest::Approx(1.0 + beta * beta / (alpha * alpha)).epsilon(1e-10));
    }
}

TEST_CASE("same-frame self homodyne: coherent forms and zero-signal limit") {
    const Acceleration acc(1.0);
    rqo::LeftWedgeAmplitudes am;
    am.grid = single_mode_grid();
    am.plus = {cplx(1.0, 0.0)};
    am.minus = {cplx(0.0, 0.0)};

    rqo::OracleSettings cfg;
    cfg.lo_amplitude = 1e3;
    const std::vector<double> phi{0.0, 0.7, 1.9, 3.1, 5.0};
    const auto tr = rqo::simulate_self(am, 0.5, 0.8, phi, acc, cfg);
    for (std::size_t i = 0; i < phi.size(); ++i) {
        CHECK(tr.X[i] == doctest::Approx(2.0 * 0.5 * std::cos(phi[i] - 0.8)).epsilon(1e-3));
        // V carries an inherent 2 (beta/alpha) cos(psi - phi) correction from
        // normalizing by the reference-only count.
        CHECK(tr.V[i] == doctest::Approx(1.0).epsilon(2.5e-3));
    }

    const auto zero = rqo::simulate_self(am, 0.0, 0.0, phi, acc, cfg);
    for (std::size_t i = 0; i < phi.size(); ++i) {
        CHECK(std::abs(zero.X[i]) < 1e-12);
        CHECK(zero.V[i] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("finite local oscillator: the dropped variance term is |beta|^2/|alpha|^2") {
    const Acceleration acc(1.0);
    rqo::LeftWedgeAmplitudes am;
    am.grid = single_mode_grid();
    am.plus = {cplx(1.0, 0.0)};
    am.minus = {cplx(0.0, 0.0)};
    rqo::OracleSettings cfg;
    const double beta = 2.0;
    for (double alpha : {50.0, 200.0, 1000.0}) {
        cfg.lo_amplitude = alpha;
        const auto tr = rqo::simulate_balanced(am, beta, 0.0, {0.3}, acc, cfg);
        CHECK(tr.V[0] - 1.0 == doctest::Approx(beta * beta / (alpha * alpha)).epsilon(1e-9));
    }
}
