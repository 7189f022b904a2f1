// oracles.hpp: independent reference computations used only by the tests.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace rabi::oracle {

// Displaced number state in the undisplaced Fock basis (dimension `cutoff`).
// shift = +g gives |n>_A (A = a + g), shift = -g gives |n>_B (B = a - g).
inline Eigen::VectorXd displaced_fock(int n, double shift, int cutoff) {
    // Vacuum of a + shift is the coherent state with amplitude -shift.
    Eigen::VectorXd v(cutoff);
    const double amp = -shift;
    double coef = std::exp(-0.5 * amp * amp);
    for (int j = 0; j < cutoff; ++j) {
        v(j) = coef;
        coef *= amp / std::sqrt(j + 1.0);
    }
    // |k+1> = (a^dagger + shift) |k> / sqrt(k+1)
    for (int k = 0; k < n; ++k) {
        Eigen::VectorXd next = shift * v;
        for (int j = 0; j + 1 < cutoff; ++j) next(j + 1) += std::sqrt(j + 1.0) * v(j);
        v = next / std::sqrt(k + 1.0);
    }
    return v;
}

// D[m][n] = (delta/2) (-1)^m <m_B | n_A> for every (m, n), both triangles computed directly.
inline Eigen::MatrixXd fock_overlap_table(double delta, double g, int n_tr, int cutoff = 200) {
    std::vector<Eigen::VectorXd> a_states;
    std::vector<Eigen::VectorXd> b_states;
    for (int k = 0; k <= n_tr; ++k) {
        a_states.push_back(displaced_fock(k, g, cutoff));
        b_states.push_back(displaced_fock(k, -g, cutoff));
    }
    Eigen::MatrixXd d(n_tr + 1, n_tr + 1);
    for (int m = 0; m <= n_tr; ++m)
        for (int n = 0; n <= n_tr; ++n)
            d(m, n) = 0.5 * delta * ((m % 2 == 0) ? 1.0 : -1.0) * b_states[m].dot(a_states[n]);
    return d;
}

// H = -(eps sz + delta sx)/2 + a^dagger a + g (a^dagger + a) sz in the bare Fock basis.
inline std::vector<double> fock_rabi_spectrum(double delta, double eps, double g, int fock) {
    const int n = 2 * fock;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int s = 0; s < 2; ++s) {
        const double sz = s == 0 ? 1.0 : -1.0;
        for (int j = 0; j < fock; ++j) {
            const int row = s * fock + j;
            h(row, row) = j - 0.5 * eps * sz;
            if (j + 1 < fock) {
                const double x = g * sz * std::sqrt(j + 1.0);
                h(row, row + 1) = x;
                h(row + 1, row) = x;
            }
        }
    }
    for (int j = 0; j < fock; ++j) {
        h(j, fock + j) = -0.5 * delta;
        h(fock + j, j) = -0.5 * delta;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

// Roots of the monic polynomial x^n + coeffs[0] x^(n-1) + ... + coeffs[n-1] from the
// eigenvalues of its companion matrix, sorted by real part.
inline std::vector<std::complex<double>> companion_roots(const std::vector<double>& coeffs) {
    const int n = static_cast<int>(coeffs.size());
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) c(0, i) = -coeffs[i];
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(c, false);
    std::vector<std::complex<double>> roots(solver.eigenvalues().data(),
                                            solver.eigenvalues().data() + n);
    std::sort(roots.begin(), roots.end(),
              [](auto a, auto b) { return a.real() < b.real(); });
    return roots;
}

// Monic characteristic polynomial det(lambda I - M) by Faddeev-LeVerrier:
// lambda^n + out[0] lambda^(n-1) + ... + out[n-1].
inline std::vector<double> characteristic_polynomial(const Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<double> coeffs(n);
    Eigen::MatrixXd mk = Eigen::MatrixXd::Zero(n, n);
    double c_prev = 1.0;
    for (int k = 1; k <= n; ++k) {
        mk = m * mk + c_prev * Eigen::MatrixXd::Identity(n, n);
        const double ck = -(m * mk).trace() / k;
        coeffs[k - 1] = ck;
        c_prev = ck;
    }
    return coeffs;
}

// Monic polynomial coefficients (highest first, leading 1 dropped) with the given roots.
inline std::vector<double> poly_from_roots(const std::vector<double>& roots) {
    std::vector<double> p{1.0};
    for (double r : roots) {
        std::vector<double> next(p.size() + 1, 0.0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i] += p[i];
            next[i + 1] -= r * p[i];
        }
        p = next;
    }
    return {p.begin() + 1, p.end()};
}

}  // namespace rabi::oracle
