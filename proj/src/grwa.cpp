#include "rabi/grwa.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rabi/errors.hpp"

namespace rabi {

namespace {

double parity_sign(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

void require_unbiased(const ModelParams& params, const char* who) {
    if (!params.unbiased()) throw DomainError(std::string(who) + ": requires epsilon == 0");
}

void require_rows(const OverlapTable& d, int highest, const char* who) {
    if (highest < 0 || highest >= d.size())
        throw IndexError(std::string(who) + ": needs table row " + std::to_string(highest) +
                         ", table size is " + std::to_string(d.size()));
}

// Parity of the excited pair drawn from manifold m.
Parity excited_parity(int m) { return m % 2 == 0 ? Parity::odd : Parity::even; }

GrwaLevels make_levels(const ModelParams& params, GrwaMethod method, double ground) {
    GrwaLevels out;
    out.params = params;
    out.method = method;
    out.ground = ground;
    return out;
}

void push_pair(GrwaLevels& out, int m, double a, double b, Parity parity) {
    if (b < a) std::swap(a, b);
    out.excited.push_back({2 * m + 1, a, parity});
    out.excited.push_back({2 * m + 2, b, parity});
}

void flag_regime(GrwaLevels& out) {
    out.out_of_regime = !out.excited.empty() && !(out.ground < out.excited.front().energy);
}

}  // namespace

std::vector<Level> GrwaLevels::levels(int k) const {
    const bool labeled = method != GrwaMethod::grwa_biased;
    std::vector<Level> all;
    all.push_back({0, ground, labeled ? Parity::even : Parity::none});
    all.insert(all.end(), excited.begin(), excited.end());
    if (k >= 0 && static_cast<int>(all.size()) > k) all.resize(k);
    return all;
}

BlockCoefficients biased_block(const OverlapTable& d, int m) {
    require_rows(d, m + 1, "biased_block");
    return {-d(m, m), -d(m, m + 1), -d(m + 1, m + 1), 0.0, 0.0, 0.0};
}

BlockCoefficients brwa_block(const OverlapTable& d, int m) {
    require_rows(d, m + 2, "brwa_block");
    return {d(m, m), d(m + 1, m + 1), d(m + 2, m + 2), d(m, m + 1), d(m, m + 2), d(m + 1, m + 2)};
}

std::pair<double, double> foa_excited(const ModelParams& params, int m, const OverlapTable& d) {
    require_unbiased(params, "foa_excited");
    require_rows(d, m + 1, "foa_excited");
    const double s = parity_sign(m);
    const double dmm = d(m, m);
    const double dnn = d(m + 1, m + 1);
    const double dmn = d(m, m + 1);
    const double center = m - params.g * params.g + 0.5 + 0.5 * s * (dnn + dmm);
    const double gap = 1.0 - s * (dmm - dnn);
    const double half_split = 0.5 * std::sqrt(gap * gap + 4.0 * dmn * dmn);
    return {center - half_split, center + half_split};
}

double foa_ground(const ModelParams& params, const OverlapTable& d) {
    require_unbiased(params, "foa_ground");
    require_rows(d, 1, "foa_ground");
    const double gap = 1.0 + (d(0, 0) - d(1, 1));
    return 0.5 - params.g * params.g - 0.5 * (d(1, 1) + d(0, 0)) -
           0.5 * std::sqrt(gap * gap + 4.0 * d(0, 1) * d(0, 1));
}

GrwaLevels foa_levels(const ModelParams& params, int m_max, const OverlapTable& d) {
    if (m_max < 0) throw DomainError("foa_levels: m_max must be >= 0");
    GrwaLevels out = make_levels(params, GrwaMethod::foa_zero_bias, foa_ground(params, d));
    for (int m = 0; m <= m_max; ++m) {
        const auto [lo, hi] = foa_excited(params, m, d);
        push_pair(out, m, lo, hi, excited_parity(m));
    }
    flag_regime(out);
    return out;
}

QuarticCoefficients biased_quartic(double epsilon, const BlockCoefficients& block) {
    const double eps = epsilon;
    const double u2 = block.u * block.u;
    const double v2 = block.v * block.v;
    const double w2 = block.w * block.w;
    const double mixed = 2.0 * v2 + u2 + w2;
    const double det_uw = block.u * block.w - v2;

    QuarticCoefficients q;
    q.b = -2.0 - 2.0 * eps;
    q.c = 1.0 + 3.0 * eps + eps * eps - mixed;
    q.d = (mixed - eps - 1.0) * eps + 2.0 * (u2 + v2);
    q.e = det_uw * det_uw - u2 * (1.0 + eps) - v2 * eps;
    return q;
}

BiasedManifold grwa_biased_manifold(const ModelParams& params, int m, const OverlapTable& d) {
    params.validate();
    const BlockCoefficients block = biased_block(d, m);
    const QuarticCoefficients q = biased_quartic(params.epsilon, block);

    BiasedManifold out;
    out.roots = quartic_roots(q.b, q.c, q.d, q.e);
    const double shift = m - params.g * params.g - 0.5 * params.epsilon;
    const auto roots = out.roots.roots();
    for (int i = 0; i < 4; ++i) out.energies[i] = roots[i] + shift;
    return out;
}

GrwaLevels grwa_biased_levels(const ModelParams& params, int m_max, const OverlapTable& d) {
    if (m_max < 0) throw DomainError("grwa_biased_levels: m_max must be >= 0");
    require_rows(d, m_max + 1, "grwa_biased_levels");

    GrwaLevels out = make_levels(params, GrwaMethod::grwa_biased, 0.0);
    for (int m = 0; m <= m_max; ++m) {
        const BiasedManifold manifold = grwa_biased_manifold(params, m, d);
        if (m == 0) out.ground = manifold.energies[0];
        push_pair(out, m, manifold.energies[1], manifold.energies[2], Parity::none);
    }
    flag_regime(out);
    return out;
}

CubicCoefficients brwa_cubic(Parity parity, const BlockCoefficients& k) {
    const double u = k.u;
    const double v = k.v;
    const double w = k.w;
    const double xyz2 = k.x * k.x + k.y * k.y + k.z * k.z;
    CubicCoefficients out;
    switch (parity) {
        case Parity::even:
            out.b = (u + v + w) - 3.0;
            out.c = -xyz2 + u * (v - 1.0) + (u + v - 1.0) * (w - 2.0);
            out.d = (2.0 * u - u * w + k.y * k.y) * (1.0 - v) - k.z * k.z * u +
                    k.x * k.x * (2.0 - w) + 2.0 * k.x * k.y * k.z;
            break;
        case Parity::odd:
            out.b = -(u + v + w) - 3.0;
            out.c = -xyz2 + u * (1.0 + v) + (u + v + 1.0) * (2.0 + w);
            out.d = (k.y * k.y - 2.0 * u - u * w) * (1.0 + v) + k.z * k.z * u +
                    k.x * k.x * (2.0 + w) - 2.0 * k.x * k.y * k.z;
            break;
        case Parity::none:
            throw DomainError("brwa_cubic: parity must be even or odd");
    }
    return out;
}

std::array<double, 3> brwa_manifold(const ModelParams& params, int m, Parity parity,
                                    const OverlapTable& d) {
    params.validate();
    require_unbiased(params, "brwa_manifold");
    const CubicCoefficients cubic = brwa_cubic(parity, brwa_block(d, m));
    const CubicRoots roots = cubic_real_roots(cubic.b, cubic.c, cubic.d);
    const double shift = m - params.g * params.g;
    return {roots.y1 + shift, roots.y2 + shift, roots.y3 + shift};
}

GrwaLevels brwa_levels(const ModelParams& params, int m_max, const OverlapTable& d) {
    if (m_max < 0) throw DomainError("brwa_levels: m_max must be >= 0");
    require_unbiased(params, "brwa_levels");
    require_rows(d, m_max + 2, "brwa_levels");

    GrwaLevels out = make_levels(params, GrwaMethod::brwa_zero_bias,
                                 brwa_manifold(params, 0, Parity::even, d)[0]);
    for (int m = 0; m <= m_max; ++m) {
        const Parity parity = excited_parity(m);
        const auto energies = brwa_manifold(params, m, parity, d);
        push_pair(out, m, energies[0], energies[1], parity);
    }
    flag_regime(out);
    return out;
}

}  // namespace rabi
