// Special-function layer: log-gamma identities, squeezing parameter,
// frame-change scalar Z_w.
//
// Reference values were frozen from 35-digit mpmath evaluations of the same
// closed forms.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "rqo/special_functions.hpp"

using rqo::Acceleration;
using rqo::cplx;

TEST_CASE("log_gamma_complex: integer and identity anchors") {
    CHECK(std::abs(rqo::log_gamma_complex(cplx(1.0, 0.0))) < 1e-14);
    CHECK(rqo::log_gamma_complex(cplx(5.0, 0.0)).real() ==
          doctest::Approx(3.1780538303479456).epsilon(1e-14));
    // |Gamma(1+i)| = sqrt(pi / sinh(pi))
    const double mag = std::exp(rqo::log_gamma_complex(cplx(1.0, 1.0)).real());
    CHECK(mag == doctest::Approx(0.52156404686493984).epsilon(1e-13));
}

TEST_CASE("log_gamma_complex: |Gamma(1+ix)|^2 = pi x / sinh(pi x) over [0.1, 10]") {
    for (int i = 0; i < 100; ++i) {
        const double x = 0.1 * std::pow(100.0, i / 99.0);
        const double lhs = std::exp(2.0 * rqo::log_gamma_complex(cplx(1.0, x)).real());
        const double rhs = std::numbers::pi * x / std::sinh(std::numbers::pi * x);
        CHECK(std::abs(lhs - rhs) / rhs < 1e-12);
    }
}

TEST_CASE("log_gamma_complex: recursion Gamma(z+1) = z Gamma(z) on a complex grid") {
    for (double re : {-3.3, -0.7, 0.3, 1.6, 4.2, 9.5}) {
        for (double im : {-800.0, -7.0, -0.4, 0.2, 3.0, 40.0, 950.0}) {
            const cplx z(re, im);
            const cplx lhs = std::exp(rqo::log_gamma_complex(z + 1.0));
            const cplx rhs = z * std::exp(rqo::log_gamma_complex(z));
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
        }
    }
}

TEST_CASE("log_gamma_complex: poles rejected") {
    CHECK_THROWS_AS(rqo::log_gamma_complex(cplx(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(rqo::log_gamma_complex(cplx(-3.0, 0.0)), std::domain_error);
}

TEST_CASE("squeezing_parameter: frozen values and limits") {
    const Acceleration a(1.0);
    CHECK(rqo::squeezing_parameter(1.0, a).r ==
          doctest::Approx(0.043240848283570178).epsilon(1e-13));
    CHECK(rqo::squeezing_parameter(0.1, a).r ==
          doctest::Approx(0.92959001622181027).epsilon(1e-13));
    // High-frequency limit r -> 0 (the Unruh and Rindler modes coincide).
    CHECK(rqo::squeezing_parameter(50.0, a).r < 1e-60);
    CHECK_THROWS_AS(rqo::squeezing_parameter(0.0, a), std::domain_error);
    CHECK_THROWS_AS(rqo::squeezing_parameter(-1.0, a), std::domain_error);
}

TEST_CASE("squeezing_parameter: strictly decreasing in omega") {
    const Acceleration a(0.7);
    double prev = rqo::squeezing_parameter(1e-4, a).r;
    for (int i = 1; i <= 200; ++i) {
        const double w = 1e-4 * std::pow(1e6, i / 200.0);
        const double r = rqo::squeezing_parameter(w, a).r;
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("thermal_occupation equals sinh^2 of the squeezing parameter") {
    const Acceleration a(1.3);
    for (double w : {0.01, 0.3, 1.0, 4.0}) {
        const double sh = std::sinh(rqo::squeezing_parameter(w, a).r);
        CHECK(rqo::thermal_occupation(w, a) == doctest::Approx(sh * sh).epsilon(1e-12));
    }
}

TEST_CASE("z_factor: magnitude law |Z|^2 2 pi a = 1 over [1e-3, 1e3]") {
    for (double a : {0.5, 1.0, 2.0}) {
        const Acceleration acc(a);
        for (int i = 0; i <= 120; ++i) {
            const double w = 1e-3 * std::pow(1e6, i / 120.0);
            CHECK(std::abs(std::norm(rqo::z_factor(w, acc)) * 2.0 * std::numbers::pi * a - 1.0) <
                  1e-10);
        }
    }
}

TEST_CASE("z_factor: phase pi/2 + arg Gamma(1 - i) at omega = a = 1") {
    const cplx z = rqo::z_factor(1.0, Acceleration(1.0));
    CHECK(std::abs(z) == doctest::Approx(0.39894228040143268).epsilon(1e-12));
    CHECK(std::arg(z) == doctest::Approx(1.8724366472624298).epsilon(1e-12));
}

TEST_CASE("z_factor_c7_literal: the as-printed variant violates the magnitude law") {
    const Acceleration a(1.0);
    const double law = std::norm(rqo::z_factor_c7_literal(2.0, a)) * 2.0 * std::numbers::pi;
    CHECK(std::abs(law - 1.0) > 0.1);  // inconsistent with Appendix-D simplifications
    CHECK_THROWS_AS(rqo::z_factor_c7_literal(1.0, a), std::domain_error);
}
