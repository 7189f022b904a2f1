#include "rabi/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rabi/errors.hpp"

namespace rabi {

namespace {

// Relative slack on sign tests that are exactly zero for repeated roots.
constexpr double kSignSlack = 1e-12;
constexpr double kMinZ = 1e-12;

template <class Poly, class Deriv>
double polish(double x, Poly p, Deriv dp) {
    // At most two Newton steps, each kept only if it lowers the residual.
    double residual = std::abs(p(x));
    for (int iter = 0; iter < 2 && residual > 0.0; ++iter) {
        const double slope = dp(x);
        if (slope == 0.0 || !std::isfinite(slope)) break;
        const double candidate = x - p(x) / slope;
        const double candidate_residual = std::abs(p(candidate));
        if (!(candidate_residual < residual)) break;
        x = candidate;
        residual = candidate_residual;
    }
    return x;
}

double clamp_radicand(double value, double scale, const char* where) {
    if (value >= 0.0) return value;
    if (value >= -kSignSlack * scale) return 0.0;
    throw ComplexRadicalError(std::string("quartic_roots: negative radicand in ") + where + " (" +
                              std::to_string(value) + ")");
}

}  // namespace

double eval_cubic(double b, double c, double d, double y) { return ((y + b) * y + c) * y + d; }

double eval_quartic(double b, double c, double d, double e, double x) {
    return (((x + b) * x + c) * x + d) * x + e;
}

CubicRoots cubic_real_roots(double b, double c, double d) {
    const double a_coef = b * b - 3.0 * c;
    const double b_coef = b * c - 9.0 * d;
    const double c_coef = c * c - 3.0 * b * d;
    const double gamma = b_coef * b_coef - 4.0 * a_coef * c_coef;

    // gamma is exactly 0 for a repeated root; the trigonometric formulas still hold there.
    const double gamma_scale = b_coef * b_coef + 4.0 * std::abs(a_coef * c_coef);
    if (!(a_coef > 0.0) || gamma > kSignSlack * gamma_scale)
        throw DiscriminantError("cubic_real_roots: no three real roots (gamma=" +
                                    std::to_string(gamma) + ", A=" + std::to_string(a_coef) + ")",
                                gamma, a_coef);

    const double sqrt_a = std::sqrt(a_coef);
    double arg = (2.0 * a_coef * b - 3.0 * b_coef) / (2.0 * a_coef * sqrt_a);
    arg = std::clamp(arg, -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    constexpr double third_turn = 2.0 * std::numbers::pi / 3.0;

    auto p = [=](double y) { return eval_cubic(b, c, d, y); };
    auto dp = [=](double y) { return (3.0 * y + 2.0 * b) * y + c; };
    auto root = [&](double phase) {
        return polish((-b - 2.0 * sqrt_a * std::cos(theta + phase)) / 3.0, p, dp);
    };

    CubicRoots out;
    out.y1 = root(0.0);
    out.y2 = root(-third_turn);
    out.y3 = root(third_turn);
    out.theta = theta;
    out.discriminant_gamma = gamma;
    return out;
}

QuarticRoots quartic_roots(double b, double c, double d, double e) {
    const CubicRoots resolvent =
        cubic_real_roots(-0.5 * c, 0.25 * b * d - e, (e * (4.0 * c - b * b) - d * d) / 8.0);
    const double y = resolvent.y3;

    const double z_sq_scale = 8.0 * std::abs(y) + b * b + 4.0 * std::abs(c);
    const double z = std::sqrt(clamp_radicand(8.0 * y + b * b - 4.0 * c, z_sq_scale, "z"));
    if (z < kMinZ)
        throw ComplexRadicalError("quartic_roots: z = " + std::to_string(z) +
                                  " too small for the (by - d)/z terms");

    const double bpz = b + z;
    const double bmz = b - z;
    const double t1 = (16.0 * y * bpz - 16.0 * d) / z;
    const double t2 = (16.0 * y * bmz - 16.0 * d) / z;
    const double r1 = std::sqrt(clamp_radicand(bpz * bpz - t1, bpz * bpz + std::abs(t1), "x1/x2"));
    const double r2 = std::sqrt(clamp_radicand(bmz * bmz + t2, bmz * bmz + std::abs(t2), "x3/x4"));

    auto p = [=](double x) { return eval_quartic(b, c, d, e, x); };
    auto dp = [=](double x) { return ((4.0 * x + 3.0 * b) * x + 2.0 * c) * x + d; };

    QuarticRoots out;
    out.x1 = polish(-0.25 * bpz - 0.25 * r1, p, dp);
    out.x2 = polish(-0.25 * bpz + 0.25 * r1, p, dp);
    out.x3 = polish(-0.25 * bmz - 0.25 * r2, p, dp);
    out.x4 = polish(-0.25 * bmz + 0.25 * r2, p, dp);
    out.resolvent_y = y;
    out.z = z;
    return out;
}

}  // namespace rabi
