#include "rabi/basis.hpp"

#include <cmath>
#include <string>

#include "rabi/errors.hpp"

namespace rabi {

double laguerre(int m, int k, double x) {
    if (m < 0 || k < 0 || m > kMaxFockIndex || k > kMaxFockIndex)
        throw DomainError("laguerre: index out of supported range (m=" + std::to_string(m) +
                          ", k=" + std::to_string(k) + ")");
    if (!std::isfinite(x)) throw DomainError("laguerre: non-finite argument");

    double prev = 1.0;  // L_0^k
    if (m == 0) return prev;
    double cur = 1.0 + k - x;  // L_1^k
    for (int i = 1; i < m; ++i) {
        const double next = ((2.0 * i + 1.0 + k - x) * cur - (i + k) * prev) / (i + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double overlap(int m, int n, double g) {
    if (m < 0 || m > n) throw DomainError("overlap: requires 0 <= m <= n");
    if (n > kMaxFockIndex) throw DomainError("overlap: index beyond supported range");
    if (!std::isfinite(g)) throw DomainError("overlap: non-finite coupling");

    const int k = n - m;
    if (g == 0.0) return k == 0 ? 1.0 : 0.0;

    const double lag = laguerre(m, k, 4.0 * g * g);
    if (lag == 0.0) return 0.0;
    const double log_mag = k * std::log(2.0 * std::abs(g)) - 2.0 * g * g +
                           0.5 * (std::lgamma(m + 1.0) - std::lgamma(n + 1.0)) +
                           std::log(std::abs(lag));
    double sign = lag < 0.0 ? -1.0 : 1.0;
    if (g < 0.0 && (k % 2 == 1)) sign = -sign;
    return sign * std::exp(log_mag);
}

double OverlapTable::at(int m, int n) const {
    if (m < 0 || n < 0 || m >= size() || n >= size())
        throw IndexError("overlap table index (" + std::to_string(m) + ", " + std::to_string(n) +
                         ") outside table of size " + std::to_string(size()));
    return entries_(m, n);
}

OverlapTable build_overlap_table(const ModelParams& params, int n_tr) {
    params.validate();
    if (n_tr < 0) throw DomainError("build_overlap_table: n_tr must be non-negative");
    if (n_tr > kMaxFockIndex)
        throw ResourceError("build_overlap_table: n_tr=" + std::to_string(n_tr) +
                            " exceeds maximum " + std::to_string(kMaxFockIndex));

    const int size = n_tr + 1;
    Eigen::MatrixXd d(size, size);
    const double half = 0.5 * params.delta;
    for (int m = 0; m < size; ++m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        for (int n = m; n < size; ++n) {
            d(m, n) = half * sign * overlap(m, n, params.g);
            d(n, m) = d(m, n);
        }
    }
    return OverlapTable(std::move(d), params.g, params.delta);
}

}  // namespace rabi
