#include "rabi/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "rabi/basis.hpp"
#include "rabi/errors.hpp"

namespace rabi {

namespace {

void check_truncation(int n_tr) {
    if (n_tr < 0) throw DomainError("n_tr must be non-negative");
    if (n_tr > kMaxFockIndex)
        throw ResourceError("n_tr=" + std::to_string(n_tr) + " exceeds maximum " +
                            std::to_string(kMaxFockIndex));
}

Spectrum solve(const Eigen::MatrixXd& h, bool keep_eigenvectors) {
    if (h.rows() != h.cols()) throw DomainError("eigen_spectrum: matrix is not square");
    if (h.rows() == 0) return {};
    if (h != h.transpose()) throw DomainError("eigen_spectrum: matrix is not symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        h, keep_eigenvectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("eigen_spectrum: symmetric eigensolver did not converge", {}, {});

    // Eigen returns eigenvalues in increasing order.
    Spectrum out;
    const Eigen::VectorXd& values = solver.eigenvalues();
    out.energies.assign(values.data(), values.data() + values.size());
    if (keep_eigenvectors) out.eigenvectors = solver.eigenvectors();
    return out;
}

// Sorted merge of the two parity sectors with labels.
Spectrum merged_parity_spectrum(const ModelParams& params, int n_tr) {
    const Spectrum even = parity_spectrum(params, n_tr, Parity::even);
    const Spectrum odd = parity_spectrum(params, n_tr, Parity::odd);

    Spectrum out;
    out.params = params;
    out.n_tr_used = n_tr;
    out.energies.reserve(even.energies.size() + odd.energies.size());
    out.parity_labels.reserve(out.energies.capacity());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < even.energies.size() || j < odd.energies.size()) {
        const bool take_even =
            j == odd.energies.size() ||
            (i < even.energies.size() && even.energies[i] <= odd.energies[j]);
        if (take_even) {
            out.energies.push_back(even.energies[i++]);
            out.parity_labels.push_back(Parity::even);
        } else {
            out.energies.push_back(odd.energies[j++]);
            out.parity_labels.push_back(Parity::odd);
        }
    }
    return out;
}

Spectrum spectrum_at(const ModelParams& params, int n_tr) {
    if (params.unbiased()) return merged_parity_spectrum(params, n_tr);
    Spectrum s = eigen_spectrum(assemble(params, n_tr));
    return s;
}

}  // namespace

HamiltonianMatrix assemble(const ModelParams& params, int n_tr) {
    params.validate();
    check_truncation(n_tr);

    const OverlapTable d = build_overlap_table(params, n_tr);
    const int size = n_tr + 1;
    const double shift = params.g * params.g;

    HamiltonianMatrix h;
    h.n_tr = n_tr;
    h.params = params;
    h.matrix = Eigen::MatrixXd::Zero(2 * size, 2 * size);
    for (int m = 0; m < size; ++m) {
        h.matrix(m, m) = m - shift - 0.5 * params.epsilon;
        h.matrix(size + m, size + m) = m - shift + 0.5 * params.epsilon;
    }
    h.matrix.topRightCorner(size, size) = -d.matrix();
    h.matrix.bottomLeftCorner(size, size) = -d.matrix();
    return h;
}

Spectrum eigen_spectrum(const HamiltonianMatrix& h, bool keep_eigenvectors) {
    Spectrum out = solve(h.matrix, keep_eigenvectors);
    out.n_tr_used = h.n_tr;
    out.params = h.params;
    return out;
}

Spectrum eigen_spectrum(const Eigen::MatrixXd& symmetric, bool keep_eigenvectors) {
    return solve(symmetric, keep_eigenvectors);
}

Spectrum parity_spectrum(const ModelParams& params, int n_tr, Parity parity) {
    params.validate();
    if (!params.unbiased()) throw DomainError("parity_spectrum: requires epsilon == 0");
    if (parity == Parity::none) throw DomainError("parity_spectrum: parity must be even or odd");
    check_truncation(n_tr);

    const OverlapTable d = build_overlap_table(params, n_tr);
    const double sign = parity == Parity::even ? -1.0 : 1.0;
    Eigen::MatrixXd h = sign * d.matrix();
    for (int m = 0; m <= n_tr; ++m) h(m, m) += m - params.g * params.g;

    Spectrum out = solve(h, false);
    out.n_tr_used = n_tr;
    out.params = params;
    out.parity_labels.assign(out.energies.size(), parity);
    return out;
}

ConvergenceReport converge(const ModelParams& params, int k_levels, double tol) {
    params.validate();
    if (k_levels < 1) throw DomainError("converged_spectrum: k_levels must be >= 1");
    if (!(tol > 0.0)) throw DomainError("converged_spectrum: tol must be positive");

    ConvergenceReport report;
    std::vector<double> previous;
    for (const int n_tr : kTruncationSchedule) {
        if (2 * (n_tr + 1) < k_levels) continue;
        Spectrum current = spectrum_at(params, n_tr);
        std::vector<double> lowest(current.energies.begin(), current.energies.begin() + k_levels);

        double change = std::numeric_limits<double>::infinity();
        if (!previous.empty()) {
            // Both lists are sorted, so index-wise comparison compares sorted multisets.
            change = 0.0;
            for (int i = 0; i < k_levels; ++i)
                change = std::max(change, std::abs(lowest[i] - previous[i]));
        }
        report.history.push_back({n_tr, lowest, change});
        if (change < tol) {
            report.spectrum = std::move(current);
            return report;
        }
        previous = std::move(lowest);
    }

    std::vector<double> before;
    if (report.history.size() >= 2) before = report.history[report.history.size() - 2].lowest;
    throw ConvergenceError("converged_spectrum: lowest " + std::to_string(k_levels) +
                               " levels not stable to " + std::to_string(tol) +
                               " within n_tr <= " + std::to_string(kMaxFockIndex),
                           std::move(before), std::move(previous));
}

Spectrum converged_spectrum(const ModelParams& params, int k_levels, double tol) {
    return converge(params, k_levels, tol).spectrum;
}

}  // namespace rabi
