#include "rabi/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rabi/errors.hpp"

namespace rabi {

namespace {

constexpr double kResonance = 1e-9;
constexpr int kVariationalGrid = 4096;

double parity_sign(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

void require_unbiased(const ModelParams& params, const char* who) {
    if (!params.unbiased()) throw DomainError(std::string(who) + ": requires epsilon == 0");
}

void require_row(const OverlapTable& d, int row, const char* who) {
    if (row < 0 || row >= d.size())
        throw IndexError(std::string(who) + ": manifold index " + std::to_string(row) +
                         " outside overlap table of size " + std::to_string(d.size()));
}

int resolve_cutoff(const OverlapTable& d, int sum_cutoff, const char* who) {
    if (sum_cutoff < 0) return d.size();
    if (sum_cutoff > d.size())
        throw IndexError(std::string(who) + ": sum_cutoff " + std::to_string(sum_cutoff) +
                         " exceeds table size " + std::to_string(d.size()));
    return sum_cutoff;
}

double refine_root(double delta, double g, double lo, double hi) {
    auto f = [&](double a) { return variational_residual(delta, g, a); };
    double f_lo = f(lo);
    for (int iter = 0; iter < 200 && hi - lo > 1e-16 * std::max(1.0, hi); ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    // Secant polish between the final bracket ends.
    double a0 = lo;
    double a1 = hi;
    double best = std::abs(f(lo)) < std::abs(f(hi)) ? lo : hi;
    for (int iter = 0; iter < 3; ++iter) {
        const double f0 = f(a0);
        const double f1 = f(a1);
        if (f1 == f0) break;
        const double a2 = a1 - f1 * (a1 - a0) / (f1 - f0);
        if (!std::isfinite(a2)) break;
        if (std::abs(f(a2)) < std::abs(f(best))) best = a2;
        a0 = a1;
        a1 = a2;
    }
    return best;
}

}  // namespace

double variational_energy(double delta, double g, double alpha) {
    return -0.5 * delta * std::exp(-2.0 * alpha * alpha) - 2.0 * g * alpha + alpha * alpha;
}

double variational_residual(double delta, double g, double alpha) {
    return delta * alpha * std::exp(-2.0 * alpha * alpha) - g + alpha;
}

VariationalResult variational_ground(const ModelParams& params) {
    params.validate();
    require_unbiased(params, "variational_ground");
    const double delta = params.delta;
    const double g = params.g;
    if (g == 0.0) return {0.0, variational_energy(delta, g, 0.0), VariationalBranch::numeric};

    // residual(0) = -g < 0 and residual(g) = delta g exp(-2g^2) >= 0, so every root lies in [0, g].
    const double upper = g * (1.0 + 1e-9);
    std::vector<double> roots;
    double prev_a = 0.0;
    double prev_f = variational_residual(delta, g, prev_a);
    for (int i = 1; i <= kVariationalGrid; ++i) {
        const double a = upper * i / kVariationalGrid;
        const double f = variational_residual(delta, g, a);
        if (f == 0.0) {
            roots.push_back(a);
        } else if ((f > 0.0) != (prev_f > 0.0) && prev_f != 0.0) {
            roots.push_back(refine_root(delta, g, prev_a, a));
        }
        prev_a = a;
        prev_f = f;
    }
    if (roots.empty()) roots.push_back(refine_root(delta, g, 0.0, upper));

    VariationalResult best{roots.front(), variational_energy(delta, g, roots.front()),
                           VariationalBranch::numeric};
    for (double alpha : roots) {
        const double e = variational_energy(delta, g, alpha);
        if (e < best.energy) best = {alpha, e, VariationalBranch::numeric};
    }
    return best;
}

VariationalResult weak_coupling_ground(const ModelParams& params) {
    params.validate();
    require_unbiased(params, "weak_coupling_ground");
    const double delta = params.delta;
    const double g = params.g;
    const double alpha = g / (1.0 + delta);
    const double energy = -0.5 * delta * std::exp(-2.0 * alpha * alpha) -
                          g * g * (1.0 + 2.0 * delta) / ((1.0 + delta) * (1.0 + delta));
    return {alpha, energy, VariationalBranch::weak_coupling};
}

VariationalResult strong_coupling_ground(const ModelParams& params) {
    params.validate();
    require_unbiased(params, "strong_coupling_ground");
    return {params.g, -params.g * params.g, VariationalBranch::strong_coupling};
}

LevelPair zoa_levels(const ModelParams& params, int m, const OverlapTable& d) {
    require_row(d, m, "zoa_levels");
    const double dmm = d(m, m);
    const double center = m - params.g * params.g;
    const double half_split = 0.5 * std::sqrt(params.epsilon * params.epsilon + 4.0 * dmm * dmm);
    return {center - half_split, center + half_split, m, Method::zoa};
}

std::array<double, 2> zoa_eigenstate(const ModelParams& params, int m, Branch branch,
                                     const OverlapTable& d) {
    const LevelPair pair = zoa_levels(params, m, d);
    const double energy = branch == Branch::minus ? pair.e_minus : pair.e_plus;
    return {parity_sign(m) * d(m, m), m - params.g * params.g - 0.5 * params.epsilon - energy};
}

double dsc_level(const ModelParams& params, int m, Parity parity, const OverlapTable& d,
                 int sum_cutoff) {
    require_unbiased(params, "dsc_level");
    require_row(d, m, "dsc_level");
    if (parity == Parity::none) throw DomainError("dsc_level: parity must be even or odd");
    const int cutoff = resolve_cutoff(d, sum_cutoff, "dsc_level");

    double sum = 0.0;
    for (int n = 0; n < cutoff; ++n)
        if (n != m) sum += d(m, n) * d(m, n) / static_cast<double>(m - n);
    const double split = parity_sign(m) * d(m, m);
    const double base = m - params.g * params.g;
    return (parity == Parity::even ? base - split : base + split) + sum;
}

LevelPair vvp_levels(const ModelParams& params, int m, int l, const OverlapTable& d,
                     int sum_cutoff) {
    if (m < 0 || l < 0) throw DomainError("vvp_levels: m and l must be non-negative");
    const int n = m + l;
    require_row(d, n, "vvp_levels");
    const int cutoff = resolve_cutoff(d, sum_cutoff, "vvp_levels");
    const double eps = params.epsilon;

    // Each state's shift excludes only its own degenerate partner.
    double shift_d = 0.0;
    double shift_c = 0.0;
    for (int k = 0; k < cutoff; ++k) {
        if (k != n) {
            const double denom = eps + m - k;
            if (std::abs(denom) < kResonance)
                throw SingularDenominatorError("vvp_levels: resonant denominator eps + m - k at k=" +
                                               std::to_string(k));
            shift_d += d(m, k) * d(m, k) / denom;
        }
        if (k != m) {
            const double denom = eps + k - n;
            if (std::abs(denom) < kResonance)
                throw SingularDenominatorError("vvp_levels: resonant denominator eps + k - n at k=" +
                                               std::to_string(k));
            shift_c -= d(n, k) * d(n, k) / denom;
        }
    }

    const double center = m + 0.5 * l - params.g * params.g + 0.5 * (shift_d + shift_c);
    const double detuning = eps - l + shift_d - shift_c;
    const double half_split = 0.5 * std::sqrt(detuning * detuning + 4.0 * d(m, n) * d(m, n));
    return {center - half_split, center + half_split, m, Method::vvp};
}

int vvp_resonance_order(double epsilon) {
    return static_cast<int>(std::ceil(std::abs(epsilon) - 0.5));
}

namespace {

std::vector<Level> finish_ladder(std::vector<Level> levels, int k) {
    std::stable_sort(levels.begin(), levels.end(),
                     [](const Level& a, const Level& b) { return a.energy < b.energy; });
    if (static_cast<int>(levels.size()) > k) levels.resize(k);
    for (std::size_t i = 0; i < levels.size(); ++i) levels[i].level_index = static_cast<int>(i);
    return levels;
}

void require_ladder_rows(const OverlapTable& d, int rows, const char* who) {
    if (rows > d.size())
        throw IndexError(std::string(who) + ": needs " + std::to_string(rows) +
                         " table rows, have " + std::to_string(d.size()));
}

}  // namespace

std::vector<Level> zoa_ladder(const ModelParams& params, int k, const OverlapTable& d) {
    if (k < 1) throw DomainError("zoa_ladder: k must be >= 1");
    require_ladder_rows(d, k, "zoa_ladder");
    std::vector<Level> levels;
    for (int m = 0; m < k; ++m) {
        const LevelPair pair = zoa_levels(params, m, d);
        Parity lower = Parity::none;
        Parity upper = Parity::none;
        if (params.unbiased()) {
            // Matches dsc_level with the sum dropped: the even level is m - g^2 - (-1)^m D_mm.
            const bool lower_is_even = parity_sign(m) * d(m, m) >= 0.0;
            lower = lower_is_even ? Parity::even : Parity::odd;
            upper = lower_is_even ? Parity::odd : Parity::even;
        }
        levels.push_back({0, pair.e_minus, lower});
        levels.push_back({0, pair.e_plus, upper});
    }
    return finish_ladder(std::move(levels), k);
}

std::vector<Level> dsc_ladder(const ModelParams& params, int k, const OverlapTable& d,
                              int sum_cutoff) {
    if (k < 1) throw DomainError("dsc_ladder: k must be >= 1");
    require_unbiased(params, "dsc_ladder");
    require_ladder_rows(d, k, "dsc_ladder");
    std::vector<Level> levels;
    for (int m = 0; m < k; ++m) {
        levels.push_back({0, dsc_level(params, m, Parity::even, d, sum_cutoff), Parity::even});
        levels.push_back({0, dsc_level(params, m, Parity::odd, d, sum_cutoff), Parity::odd});
    }
    return finish_ladder(std::move(levels), k);
}

std::vector<Level> vvp_ladder(const ModelParams& params, int k, const OverlapTable& d,
                              int sum_cutoff) {
    if (k < 1) throw DomainError("vvp_ladder: k must be >= 1");
    // The spectrum is even in epsilon, so work at |epsilon|.
    ModelParams p = params;
    p.epsilon = std::abs(params.epsilon);
    const int l = vvp_resonance_order(p.epsilon);
    require_ladder_rows(d, k + l, "vvp_ladder");
    const int cutoff = resolve_cutoff(d, sum_cutoff, "vvp_ladder");

    std::vector<Level> levels;
    // c_j with j < l has no partner d_{j-l}; use its plain second-order shift.
    for (int j = 0; j < l; ++j) {
        double shift = 0.0;
        for (int kk = 0; kk < cutoff; ++kk) {
            const double denom = j - kk - p.epsilon;
            if (std::abs(denom) < kResonance)
                throw SingularDenominatorError("vvp_ladder: resonant unpaired state");
            shift += d(j, kk) * d(j, kk) / denom;
        }
        levels.push_back({0, j - p.g * p.g - 0.5 * p.epsilon + shift, Parity::none});
    }
    for (int m = 0; m < k; ++m) {
        const LevelPair pair = vvp_levels(p, m, l, d, cutoff);
        levels.push_back({0, pair.e_minus, Parity::none});
        levels.push_back({0, pair.e_plus, Parity::none});
    }
    return finish_ladder(std::move(levels), k);
}

}  // namespace rabi
