// closedform.hpp: variational ground state and the low-order analytical schemes
// (zero-order approximation, deep-strong-coupling perturbation, Van Vleck perturbation).

#pragma once

#include <array>
#include <vector>

#include "rabi/basis.hpp"
#include "rabi/model.hpp"

namespace rabi {

enum class VariationalBranch { numeric, weak_coupling, strong_coupling };

// Trial state: displaced vacua with displacement alpha, energy
//   E(alpha) = -(delta/2) exp(-2 alpha^2) - 2 g alpha + alpha^2.
struct VariationalResult {
    double alpha{0.0};
    double energy{0.0};
    VariationalBranch branch{VariationalBranch::numeric};
};

double variational_energy(double delta, double g, double alpha);
// Stationarity condition delta alpha exp(-2 alpha^2) - g + alpha.
double variational_residual(double delta, double g, double alpha);

// All roots of the stationarity condition are bracketed on a grid over [0, g], refined by
// bisection and a secant polish, and the root with the lowest energy is returned.
VariationalResult variational_ground(const ModelParams& params);
// alpha = g / (1 + delta).
VariationalResult weak_coupling_ground(const ModelParams& params);
// alpha = g, E = -g^2.
VariationalResult strong_coupling_ground(const ModelParams& params);

struct LevelPair {
    double e_minus{0.0};
    double e_plus{0.0};
    int m{0};
    Method method{Method::zoa};
};

enum class Branch { minus, plus };

// E_-/+ = m - g^2 -/+ sqrt(eps^2 + 4 D_mm^2) / 2.
LevelPair zoa_levels(const ModelParams& params, int m, const OverlapTable& d);

// Unnormalized ((-1)^m D_mm, m - g^2 - eps/2 - E) multiplying |m>_A and |m>_B.
// At delta == 0 the lower branch degenerates to the zero vector.
std::array<double, 2> zoa_eigenstate(const ModelParams& params, int m, Branch branch,
                                     const OverlapTable& d);

// E_m = m - g^2 -/+ (-1)^m D_mm + sum_{n != m, n < sum_cutoff} D_mn^2 / (m - n),
// minus sign for even parity. Requires epsilon == 0; sum_cutoff <= d.size() (-1 selects d.size()).
double dsc_level(const ModelParams& params, int m, Parity parity, const OverlapTable& d,
                 int sum_cutoff = -1);

// Van Vleck pair for the near-degenerate states (d_m, c_n), n = m + l:
//   E = m + l/2 - g^2 + S/2 -/+ sqrt((eps - l + S')^2 + 4 D_mn^2) / 2
// with S = s_d + s_c, S' = s_d - s_c and the second-order shifts
//   s_d = sum_{k != n} D_mk^2 / (eps + m - k),   s_c = -sum_{k != m} D_nk^2 / (eps + k - n),
// summed over k < sum_cutoff. Throws SingularDenominatorError on a resonant included term.
LevelPair vvp_levels(const ModelParams& params, int m, int l, const OverlapTable& d,
                     int sum_cutoff = -1);

// Resonance order used for the VVP ladder: nearest integer to |eps|, halves rounded down.
int vvp_resonance_order(double epsilon);

// Lowest k levels of each scheme, ascending, level_index = position. The table must cover every
// manifold touched (k + l + 1 rows for VVP, k + 1 otherwise). At epsilon == 0 the ZOA and DSC
// levels carry parity labels.
std::vector<Level> zoa_ladder(const ModelParams& params, int k, const OverlapTable& d);
std::vector<Level> dsc_ladder(const ModelParams& params, int k, const OverlapTable& d,
                              int sum_cutoff = -1);
std::vector<Level> vvp_ladder(const ModelParams& params, int k, const OverlapTable& d,
                              int sum_cutoff = -1);

}  // namespace rabi
