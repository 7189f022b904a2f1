// basis.hpp: displaced Fock-state overlaps and the tunneling-weighted overlap matrix.
//
// The two displaced modes are A = a + g and B = a - g. Everything downstream (exact
// diagonalization and every approximation) consumes the symmetric matrix
//
//     D[m][n] = (delta/2) (-1)^m <m_B | n_A>,
//
// with <m_B|n_A> = (2g)^(n-m) exp(-2g^2) sqrt(m!/n!) L_m^(n-m)(4g^2) for n >= m.

#pragma once

#include <Eigen/Core>

#include "rabi/model.hpp"

namespace rabi {

// Largest Fock index (and Laguerre degree/order) the library accepts.
inline constexpr int kMaxFockIndex = 512;

// Associated Laguerre polynomial L_m^k(x) by forward three-term recurrence in m.
double laguerre(int m, int k, double x);

// <m_B | n_A> for 0 <= m <= n, evaluated in log space so that large indices do not overflow.
double overlap(int m, int n, double g);

class OverlapTable {
public:
    OverlapTable(Eigen::MatrixXd entries, double g, double delta)
        : entries_(std::move(entries)), g_(g), delta_(delta) {}

    int size() const { return static_cast<int>(entries_.rows()); }
    double operator()(int m, int n) const { return entries_(m, n); }
    // Bounds-checked access; throws IndexError.
    double at(int m, int n) const;

    const Eigen::MatrixXd& matrix() const { return entries_; }
    double g() const { return g_; }
    double delta() const { return delta_; }

private:
    Eigen::MatrixXd entries_;
    double g_;
    double delta_;
};

// Table of size n_tr + 1. Upper triangle from overlap(), lower triangle mirrored.
OverlapTable build_overlap_table(const ModelParams& params, int n_tr);

}  // namespace rabi
