// polyroots.hpp: closed-form real roots of monic cubics and quartics.
//
// Root labels are part of the contract: the level-selection rules in grwa.hpp refer to roots by
// label (y1, y2 of a cubic; x1, x2, x3 of a quartic), not by value.

#pragma once

#include <array>

namespace rabi {

// Roots of y^3 + b y^2 + c y + d with A = b^2 - 3c, B = bc - 9d, C = c^2 - 3bd, gamma = B^2 - 4AC,
//   theta = arccos((2Ab - 3B) / (2 A^(3/2))) / 3,
//   y1 = (-b - 2 sqrt(A) cos(theta)) / 3,
//   y2 = (-b - 2 sqrt(A) cos(theta - 2pi/3)) / 3,
//   y3 = (-b - 2 sqrt(A) cos(theta + 2pi/3)) / 3.
// Since theta lies in [0, pi/3], y1 <= y2 <= y3.
struct CubicRoots {
    double y1{0.0};
    double y2{0.0};
    double y3{0.0};
    double theta{0.0};
    double discriminant_gamma{0.0};

    std::array<double, 3> roots() const { return {y1, y2, y3}; }
};

// Quartic x^4 + b x^3 + c x^2 + d x + e factored through the resolvent cubic
//   y^3 - (c/2) y^2 + (bd/4 - e) y + (e(4c - b^2) - d^2)/8 = 0,
// taking its third root y3 and z = sqrt(8y + b^2 - 4c):
//   x1,2 = -(b+z)/4 -/+ sqrt((b+z)^2 - (16y(b+z) - 16d)/z) / 4
//   x3,4 = -(b-z)/4 -/+ sqrt((b-z)^2 + (16y(b-z) - 16d)/z) / 4
struct QuarticRoots {
    double x1{0.0};
    double x2{0.0};
    double x3{0.0};
    double x4{0.0};
    double resolvent_y{0.0};
    double z{0.0};

    std::array<double, 4> roots() const { return {x1, x2, x3, x4}; }
};

double eval_cubic(double b, double c, double d, double y);
double eval_quartic(double b, double c, double d, double e, double x);

// Throws DiscriminantError when the cubic lacks three real roots. Each root gets Newton polish.
CubicRoots cubic_real_roots(double b, double c, double d);

// Throws DiscriminantError (resolvent) or ComplexRadicalError (negative radicand, z ~ 0).
QuarticRoots quartic_roots(double b, double c, double d, double e);

}  // namespace rabi
