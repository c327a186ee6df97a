// Complex special functions and frame-change scalars.
//
// Everything downstream (Bogoliubov coefficients in both scenarios) reduces
// to the principal-branch complex log-gamma, the single-frequency squeezing
// parameter r_w = atanh(exp(-pi w / a)), and the scalar Z_w that carries the
// magnitude law |Z_w|^2 = 1/(2 pi a).
//
// log_gamma_complex uses the 15-term Lanczos expansion (g = 607/128), with
// upward recursion for Re z < 8 so the asymptotic region of the expansion is
// always used; relative accuracy is ~1e-14 over |Im z| <= 1e3. The branch is
// the analytic continuation from log Gamma(x) on the positive real axis
// (imaginary part continuous along paths avoiding the negative real axis),
// not the mod-2pi principal value of the logarithm.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rqo {

using cplx = std::complex<double>;

// Acceleration of the uniformly accelerated observer, natural units (c = 1).
struct Acceleration {
    double a;
    explicit Acceleration(double value) : a(value) {
        if (!(a > 0.0)) throw std::domain_error("Acceleration must be positive");
    }
};

// Dimensionless squeezing parameter between Unruh and Rindler modes.
struct SqueezingParameter {
    double r;
};

namespace detail {

// Lanczos g = 607/128, N = 15 (Boost/Godfrey coefficients).
inline constexpr double kLanczosG = 4.7421875;  // 607/128
inline constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5, 1.5808870322491248884e-4,
    -2.1026444172410488319e-4,  2.1743961811521264320e-4,  -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5, 3.6899182659531622704e-6};

// Valid for Re z >= 8: plain Lanczos evaluation.
inline cplx log_gamma_lanczos(const cplx& z) {
    // Evaluated at z - 1 per the classical formulation.
    const cplx zm1 = z - 1.0;
    cplx sum = kLanczosCoeff[0];
    for (int k = 1; k < 15; ++k) sum += kLanczosCoeff[k] / (zm1 + static_cast<double>(k));
    const cplx t = zm1 + (kLanczosG + 0.5);
    constexpr double half_log_two_pi = 0.91893853320467274178;  // log(2 pi)/2
    return half_log_two_pi + (zm1 + 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace detail

// Principal-branch log Gamma(z) away from the poles z = 0, -1, -2, ...
// The branch is fixed by upward recursion with principal logs,
//   log Gamma(z) = log Gamma(z + n) - sum_{k=0}^{n-1} log(z + k),
// which reproduces the analytic continuation from the positive real axis for
// every argument off the negative real axis. Points strictly between the
// poles on the negative real axis sit on the branch cut and are outside the
// supported domain (module non-goal).
inline cplx log_gamma_complex(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real()))
        throw std::domain_error("log_gamma_complex: pole at z = " + std::to_string(static_cast<long long>(z.real())));

    cplx shift(0.0, 0.0);
    cplx zz = z;
    while (zz.real() < 8.0) {
        shift += std::log(zz);
        zz += 1.0;
    }
    return detail::log_gamma_lanczos(zz) - shift;
}

inline cplx gamma_complex(cplx z) { return std::exp(log_gamma_complex(z)); }

// r_w = atanh(exp(-pi w / a)); diverges logarithmically as w -> 0+.
inline SqueezingParameter squeezing_parameter(double omega, Acceleration acc) {
    if (!(omega > 0.0)) throw std::domain_error("squeezing_parameter: omega must be positive");
    const double x = std::exp(-std::numbers::pi * omega / acc.a);
    return SqueezingParameter{std::atanh(x)};
}

// Thermal occupation sinh^2(r_w) = 1/(e^{2 pi w/a} - 1), computed without
// forming r_w (stable for w/a large).
inline double thermal_occupation(double omega, Acceleration acc) {
    if (!(omega > 0.0)) throw std::domain_error("thermal_occupation: omega must be positive");
    return 1.0 / std::expm1(2.0 * std::numbers::pi * omega / acc.a);
}

// Z_w = i sqrt(2 sinh(pi w/a)) / (2 pi sqrt(w)) * Gamma(1 - i w/a).
// |Z_w|^2 = 1/(2 pi a) for every w by |Gamma(1+ix)|^2 = pi x / sinh(pi x).
// Computed through logs so the sinh and Gamma growth cancel before
// exponentiation (sinh(pi w/a) overflows on its own near w/a ~ 230).
inline cplx z_factor(double omega, Acceleration acc) {
    if (!(omega > 0.0)) throw std::domain_error("z_factor: omega must be positive");
    const double x = omega / acc.a;
    const double pix = std::numbers::pi * x;
    // log(2 sinh(pix)) = pix + log1p(-e^{-2 pix})
    const double log_sinh_term = 0.5 * (pix + std::log1p(-std::exp(-2.0 * pix)));
    const cplx lg = log_gamma_complex(cplx(1.0, -x));
    const cplx log_mag = log_sinh_term - std::log(2.0 * std::numbers::pi * std::sqrt(omega)) + lg;
    return cplx(0.0, 1.0) * std::exp(log_mag);
}

// Literal Eq.-as-printed variant with Gamma(i - i w/a) in place of
// Gamma(1 - i w/a). Kept for comparison only: it breaks the magnitude law
// |Z|^2 = 1/(2 pi a) and has a spurious pole at w = a. Not used anywhere in
// the production pipeline.
inline cplx z_factor_c7_literal(double omega, Acceleration acc) {
    if (!(omega > 0.0)) throw std::domain_error("z_factor_c7_literal: omega must be positive");
    const double x = omega / acc.a;
    if (x == 1.0) throw std::domain_error("z_factor_c7_literal: pole at omega = a");
    const double pix = std::numbers::pi * x;
    const double log_sinh_term = 0.5 * (pix + std::log1p(-std::exp(-2.0 * pix)));
    const cplx lg = log_gamma_complex(cplx(0.0, 1.0 - x));
    const cplx log_mag = log_sinh_term - std::log(2.0 * std::numbers::pi * std::sqrt(omega)) + lg;
    return cplx(0.0, 1.0) * std::exp(log_mag);
}

}  // namespace rqo
