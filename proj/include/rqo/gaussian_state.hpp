// Finite-mode Gaussian-state simulator.
//
// Convention: quadratures r = (x_1, p_1, ..., x_M, p_M) with x = a + a†,
// p = i(a† - a), so [x, p] = 2i, the vacuum covariance is the identity and
// shot noise sits at 1. Symplectic form Omega = diag blocks [[0,1],[-1,0]];
// a transform r -> S r + d is Gaussian iff S Omega S^T = Omega.
//
// Photon-number statistics of weighted sums D = sum_i q_i n_i come from
// Gaussian moment factorization. With Q = diag(q_i, q_i), Delta = r - mu and
// M_ab = <Delta_a Delta_b> = sigma_ab + i Omega_ab, Wick pairing gives
//   < r^T Q r >  = tr(Q sigma) + mu^T Q mu
//   Var(r^T Q r) = 2 tr(Q sigma Q sigma) + 2 tr(Q Omega Q Omega)
//                  + 4 mu^T Q sigma Q mu
// (the Omega term encodes operator ordering: it cancels the vacuum
// contribution so a coherent state comes out exactly Poissonian), and
//   D = (r^T Q r)/4 - sum_i q_i / 2.
// Everything is deterministic and exact at the discretized level.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "rqo/frequency_grid.hpp"
#include "rqo/special_functions.hpp"

namespace rqo {

struct GaussianState {
    Eigen::VectorXd mean;  // length 2M
    Eigen::MatrixXd cov;   // 2M x 2M symmetric

    std::size_t n_modes() const { return static_cast<std::size_t>(mean.size()) / 2; }

    // Smallest eigenvalue of cov + i Omega (must be >= -tol for a physical state).
    double uncertainty_min_eigenvalue() const;
};

inline GaussianState vacuum_state(std::size_t n_modes) {
    GaussianState st;
    st.mean = Eigen::VectorXd::Zero(2 * static_cast<Eigen::Index>(n_modes));
    st.cov = Eigen::MatrixXd::Identity(2 * static_cast<Eigen::Index>(n_modes),
                                       2 * static_cast<Eigen::Index>(n_modes));
    return st;
}

inline Eigen::MatrixXd symplectic_form(std::size_t n_modes) {
    Eigen::MatrixXd om = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (std::size_t m = 0; m < n_modes; ++m) {
        om(2 * m, 2 * m + 1) = 1.0;
        om(2 * m + 1, 2 * m) = -1.0;
    }
    return om;
}

inline double GaussianState::uncertainty_min_eigenvalue() const {
    const std::size_t M = n_modes();
    Eigen::MatrixXcd h = cov.cast<std::complex<double>>();
    const Eigen::MatrixXd om = symplectic_form(M);
    h += std::complex<double>(0.0, 1.0) * om.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

struct SymplecticOp {
    Eigen::MatrixXd S;
    Eigen::VectorXd d;

    double symplectic_residual() const {
        const std::size_t M = static_cast<std::size_t>(S.rows()) / 2;
        const Eigen::MatrixXd om = symplectic_form(M);
        return (S * om * S.transpose() - om).cwiseAbs().maxCoeff();
    }
};

inline GaussianState apply(const GaussianState& st, const SymplecticOp& op) {
    if (op.S.rows() != st.mean.size())
        throw std::invalid_argument("apply: operator and state dimensions differ");
    GaussianState out;
    out.mean = op.S * st.mean + op.d;
    out.cov = op.S * st.cov * op.S.transpose();
    return out;
}

inline GaussianState partial_trace(const GaussianState& st, const std::vector<std::size_t>& keep) {
    GaussianState out;
    out.mean.resize(2 * static_cast<Eigen::Index>(keep.size()));
    out.cov.resize(2 * keep.size(), 2 * keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a) {
        out.mean(2 * a) = st.mean(2 * keep[a]);
        out.mean(2 * a + 1) = st.mean(2 * keep[a] + 1);
        for (std::size_t b = 0; b < keep.size(); ++b)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    out.cov(2 * a + i, 2 * b + j) = st.cov(2 * keep[a] + i, 2 * keep[b] + j);
    }
    return out;
}

inline SymplecticOp identity_op(std::size_t n_modes) {
    SymplecticOp op;
    op.S = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
    op.d = Eigen::VectorXd::Zero(2 * n_modes);
    return op;
}

// Displacement a_i -> a_i + gamma_i: pure mean shift (2 Re, 2 Im per mode).
inline SymplecticOp displacement_op(const std::vector<cplx>& gamma) {
    SymplecticOp op = identity_op(gamma.size());
    for (std::size_t m = 0; m < gamma.size(); ++m) {
        op.d(2 * m) = 2.0 * gamma[m].real();
        op.d(2 * m + 1) = 2.0 * gamma[m].imag();
    }
    return op;
}

// a -> e^{i phi} a on the listed modes.
inline SymplecticOp phase_shift_op(std::size_t n_modes, const std::vector<std::size_t>& modes,
                                   double phi) {
    SymplecticOp op = identity_op(n_modes);
    const double c = std::cos(phi), s = std::sin(phi);
    for (std::size_t m : modes) {
        op.S(2 * m, 2 * m) = c;
        op.S(2 * m, 2 * m + 1) = -s;
        op.S(2 * m + 1, 2 * m) = s;
        op.S(2 * m + 1, 2 * m + 1) = c;
    }
    return op;
}

// Balanced beam splitter on (signal s, local oscillator l) pairs:
//   a_s -> (a_s - a_l)/sqrt2,  a_l -> (a_l + a_s)/sqrt2
// so that N_l'' - N_s'' = a_l† a_s + a_s† a_l before the phase shift.
inline SymplecticOp balanced_beam_splitter_op(std::size_t n_modes,
                                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    SymplecticOp op = identity_op(n_modes);
    const double r = 1.0 / std::sqrt(2.0);
    for (auto [s, l] : pairs) {
        for (int q = 0; q < 2; ++q) {
            op.S(2 * s + q, 2 * s + q) = r;
            op.S(2 * s + q, 2 * l + q) = -r;
            op.S(2 * l + q, 2 * l + q) = r;
            op.S(2 * l + q, 2 * s + q) = r;
        }
    }
    return op;
}

// Two-mode squeezer a_i = cosh(r) c_i + sinh(r) d_j†, b_j = cosh(r) d_j + sinh(r) c_i†,
// expressed as the map from (c,d) quadratures to (a,b) quadratures.
inline SymplecticOp two_mode_squeeze_op(std::size_t n_modes,
                                        const std::vector<std::tuple<std::size_t, std::size_t, double>>& pairs) {
    SymplecticOp op = identity_op(n_modes);
    for (auto [i, j, r] : pairs) {
        const double ch = std::cosh(r), sh = std::sinh(r);
        op.S(2 * i, 2 * i) = ch;
        op.S(2 * i, 2 * j) = sh;
        op.S(2 * i + 1, 2 * i + 1) = ch;
        op.S(2 * i + 1, 2 * j + 1) = -sh;
        op.S(2 * j, 2 * j) = ch;
        op.S(2 * j, 2 * i) = sh;
        op.S(2 * j + 1, 2 * j + 1) = ch;
        op.S(2 * j + 1, 2 * i + 1) = -sh;
    }
    return op;
}

// General Bogoliubov map new_i = sum_j U_ij old_j + W_ij old_j†, as the
// quadrature transform x' = Re(E) x - Im(E) p, p' = Im(F) x + Re(F) p with
// E = U + conj(W), F = U - conj(W).
inline SymplecticOp bogoliubov_symplectic(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& W) {
    if (U.rows() != W.rows() || U.cols() != W.cols() || U.rows() != U.cols())
        throw std::invalid_argument("bogoliubov_symplectic: U, W must be square and congruent");
    const std::size_t M = static_cast<std::size_t>(U.rows());
    SymplecticOp op;
    op.S = Eigen::MatrixXd::Zero(2 * M, 2 * M);
    op.d = Eigen::VectorXd::Zero(2 * M);
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = 0; j < M; ++j) {
            const cplx E = U(i, j) + std::conj(W(i, j));
            const cplx F = U(i, j) - std::conj(W(i, j));
            op.S(2 * i, 2 * j) = E.real();
            op.S(2 * i, 2 * j + 1) = -E.imag();
            op.S(2 * i + 1, 2 * j) = F.imag();
            op.S(2 * i + 1, 2 * j + 1) = F.real();
        }
    return op;
}

struct PhotonStats {
    double mean = 0.0;
    double variance = 0.0;
};

// Statistics of D = sum_i q_i n_i (q per mode; 0 entries are skipped).
inline PhotonStats weighted_number_stats(const GaussianState& st, const std::vector<double>& q) {
    const std::size_t M = st.n_modes();
    if (q.size() != M) throw std::invalid_argument("weighted_number_stats: q must have one entry per mode");

    // Active quadrature indices only; D touches a subset of the system.
    std::vector<Eigen::Index> idx;
    std::vector<double> qa;
    for (std::size_t m = 0; m < M; ++m)
        if (q[m] != 0.0) {
            idx.push_back(2 * m);
            qa.push_back(q[m]);
            idx.push_back(2 * m + 1);
            qa.push_back(q[m]);
        }
    const std::size_t n = idx.size();

    double tr_qs = 0.0, mu_q_mu = 0.0, q_total = 0.0, q2_total = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
        tr_qs += qa[a] * st.cov(idx[a], idx[a]);
        mu_q_mu += qa[a] * st.mean(idx[a]) * st.mean(idx[a]);
    }
    for (double v : q) {
        q_total += v;
        q2_total += v * v;
    }

    double tr_qsqs = 0.0, mu_qsq_mu = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
        double row_mu = 0.0;
        for (std::size_t b = 0; b < n; ++b) {
            const double sab = st.cov(idx[a], idx[b]);
            tr_qsqs += qa[a] * qa[b] * sab * sab;
            row_mu += sab * qa[b] * st.mean(idx[b]);
        }
        mu_qsq_mu += qa[a] * st.mean(idx[a]) * row_mu;
    }
    const double tr_qoqo = -2.0 * q2_total;

    PhotonStats ps;
    ps.mean = 0.25 * (tr_qs + mu_q_mu) - 0.5 * q_total;
    ps.variance = (2.0 * tr_qsqs + 2.0 * tr_qoqo + 4.0 * mu_qsq_mu) / 16.0;
    return ps;
}

inline double mean_photon_number(const GaussianState& st, const std::vector<std::size_t>& modes) {
    std::vector<double> q(st.n_modes(), 0.0);
    for (std::size_t m : modes) q[m] = 1.0;
    return weighted_number_stats(st, q).mean;
}

}  // namespace rqo
