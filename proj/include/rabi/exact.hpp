// exact.hpp: numerically exact spectrum in the displaced-oscillator basis.
//
// With |psi> = (sum_n c_n |n>_A, sum_n (-1)^n d_n |n>_B) the Schrodinger equation becomes
//
//     (m - g^2 - eps/2) c_m - sum_n D_mn d_n = E c_m
//     (m - g^2 + eps/2) d_m - sum_n D_mn c_n = E d_m
//
// which is a dense real symmetric eigenproblem of dimension 2(n_tr + 1).

#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "rabi/model.hpp"

namespace rabi {

struct HamiltonianMatrix {
    Eigen::MatrixXd matrix;  // basis ordering (c_0..c_N, d_0..d_N)
    int n_tr{0};
    ModelParams params;

    int block_size() const { return n_tr + 1; }
};

struct Spectrum {
    std::vector<double> energies;  // ascending
    int n_tr_used{0};
    std::vector<Parity> parity_labels;  // empty, or one label per energy
    ModelParams params;
    std::optional<Eigen::MatrixXd> eigenvectors;  // columns, unit norm, same order as energies
};

HamiltonianMatrix assemble(const ModelParams& params, int n_tr);

// Dense symmetric eigensolve (tridiagonalization + implicit QR). Throws ConvergenceError on
// solver failure and DomainError if the input is not symmetric.
Spectrum eigen_spectrum(const HamiltonianMatrix& h, bool keep_eigenvectors = false);
Spectrum eigen_spectrum(const Eigen::MatrixXd& symmetric, bool keep_eigenvectors = false);

// Half-size problem (m - g^2) c_m -/+ sum_n D_mn c_n = E c_m for d_n = +/- c_n.
// Requires epsilon == 0; the minus sign is the even sector.
Spectrum parity_spectrum(const ModelParams& params, int n_tr, Parity parity);

// Truncations tried by converged_spectrum, in order.
inline constexpr int kTruncationSchedule[] = {8, 16, 32, 64, 128, 256, 512};

struct ConvergenceStep {
    int n_tr{0};
    std::vector<double> lowest;  // lowest k_levels energies at this truncation
    double max_change{0.0};      // vs the previous step; infinity for the first
};

struct ConvergenceReport {
    Spectrum spectrum;
    std::vector<ConvergenceStep> history;
};

// Doubles n_tr along kTruncationSchedule until the lowest k_levels energies move by less than
// tol between consecutive truncations. At epsilon == 0 the spectrum is built from the two parity
// sectors and carries parity labels. Throws ConvergenceError with the last two iterates if the
// schedule is exhausted.
ConvergenceReport converge(const ModelParams& params, int k_levels, double tol = 1e-10);
Spectrum converged_spectrum(const ModelParams& params, int k_levels, double tol = 1e-10);

}  // namespace rabi
