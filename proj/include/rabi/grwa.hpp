// grwa.hpp: generalized rotating-wave approximation (first-order blocks) at zero and finite
// bias, and the beyond-RWA second-order blocks at zero bias.
//
// Level bookkeeping at zero bias follows the weak-coupling parity ladder: the ground state is
// even, then two odd, two even, two odd, ... Excited levels 2m+1 and 2m+2 come from manifold m,
// odd parity for even m and even parity for odd m.

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "rabi/basis.hpp"
#include "rabi/model.hpp"
#include "rabi/polyroots.hpp"

namespace rabi {

enum class GrwaMethod { foa_zero_bias, grwa_biased, brwa_zero_bias };

struct GrwaLevels {
    double ground{0.0};
    std::vector<Level> excited;  // ascending level_index starting at 1
    ModelParams params;
    GrwaMethod method{GrwaMethod::foa_zero_bias};
    // Set when the selected roots do not give ground < first excited. Energies are still reported.
    bool out_of_regime{false};

    // Ground followed by the excited levels, truncated to k entries (all if k < 0).
    std::vector<Level> levels(int k = -1) const;
};

// Overlap entries feeding one block. The biased quartic uses u = -D_mm, v = -D_{m,m+1},
// w = -D_{m+1,m+1} (x, y, z unused); the BRWA cubic uses u = D_mm, v = D_{m+1,m+1},
// w = D_{m+2,m+2}, x = D_{m,m+1}, y = D_{m,m+2}, z = D_{m+1,m+2}.
struct BlockCoefficients {
    double u{0.0};
    double v{0.0};
    double w{0.0};
    double x{0.0};
    double y{0.0};
    double z{0.0};
};

BlockCoefficients biased_block(const OverlapTable& d, int m);
BlockCoefficients brwa_block(const OverlapTable& d, int m);

// Excited pair (ascending) of manifold m at zero bias.
std::pair<double, double> foa_excited(const ModelParams& params, int m, const OverlapTable& d);
double foa_ground(const ModelParams& params, const OverlapTable& d);
GrwaLevels foa_levels(const ModelParams& params, int m_max, const OverlapTable& d);

// Monic quartic x^4 + b x^3 + c x^2 + d x + e in the shifted variable x = E - (m - g^2 - eps/2).
struct QuarticCoefficients {
    double b{0.0};
    double c{0.0};
    double d{0.0};
    double e{0.0};
};

QuarticCoefficients biased_quartic(double epsilon, const BlockCoefficients& block);

struct BiasedManifold {
    QuarticRoots roots;
    std::array<double, 4> energies{};  // in root-label order x1..x4
};

BiasedManifold grwa_biased_manifold(const ModelParams& params, int m, const OverlapTable& d);
// Ground from x1 at m = 0; levels 2m+1, 2m+2 from x2 and x3 at manifold m.
GrwaLevels grwa_biased_levels(const ModelParams& params, int m_max, const OverlapTable& d);

struct CubicCoefficients {
    double b{0.0};
    double c{0.0};
    double d{0.0};
};

// Cubic X^3 + b X^2 + c X + d in X = E - (m - g^2) for one parity sector.
CubicCoefficients brwa_cubic(Parity parity, const BlockCoefficients& block);

// Energies in root-label order y1, y2, y3.
std::array<double, 3> brwa_manifold(const ModelParams& params, int m, Parity parity,
                                    const OverlapTable& d);
// Ground from y1 of the even m = 0 cubic; levels 2m+1, 2m+2 from y1, y2 of the odd (even m) or
// even (odd m) cubic.
GrwaLevels brwa_levels(const ModelParams& params, int m_max, const OverlapTable& d);

}  // namespace rabi
