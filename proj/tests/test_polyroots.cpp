#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rabi/errors.hpp"
#include "rabi/polyroots.hpp"

using rabi::cubic_real_roots;
using rabi::quartic_roots;

namespace {

std::vector<double> sorted(auto roots) {
    std::vector<double> v(roots.begin(), roots.end());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("cubic: labeled roots of (x-1)(x-2)(x-3)") {
    const auto r = cubic_real_roots(-6.0, 11.0, -6.0);
    CHECK(r.y1 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.y2 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.y3 == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(r.discriminant_gamma < 0.0);
}

TEST_CASE("cubic: x^3 - x") {
    const auto r = cubic_real_roots(0.0, -1.0, 0.0);
    CHECK(r.y1 == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(r.y2) < 1e-14);
    CHECK(r.y3 == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("cubic: repeated root is accepted") {
    // (x + 1/2)(x - 3/2)^2
    const auto r = cubic_real_roots(-2.5, 0.75, 1.125);
    CHECK(r.y1 == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(std::abs(r.y2 - 1.5) < 1e-7);
    CHECK(std::abs(r.y3 - 1.5) < 1e-7);
}

TEST_CASE("cubic: discriminant errors carry diagnostics") {
    CHECK_THROWS_AS(cubic_real_roots(0.0, 1.0, 0.0), rabi::DiscriminantError);
    try {
        cubic_real_roots(0.0, -3.0, 3.0);
        FAIL("expected DiscriminantError");
    } catch (const rabi::DiscriminantError& e) {
        CHECK(e.gamma() == doctest::Approx(405.0));
        CHECK(e.a() == doctest::Approx(9.0));
    }
}

TEST_CASE("cubic: random three-real-root cubics vs companion matrix") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::vector<double> truth{dist(rng), dist(rng), dist(rng)};
        const auto coeffs = rabi::oracle::poly_from_roots(truth);
        const auto r = cubic_real_roots(coeffs[0], coeffs[1], coeffs[2]);
        const auto ref = rabi::oracle::companion_roots(coeffs);
        const auto got = sorted(r.roots());
        for (int i = 0; i < 3; ++i) CHECK(std::abs(got[i] - ref[i].real()) < 1e-8);
        CHECK(r.y1 <= r.y2);
        CHECK(r.y2 <= r.y3);
        for (double y : r.roots())
            CHECK(std::abs(rabi::eval_cubic(coeffs[0], coeffs[1], coeffs[2], y)) < 1e-9);
        // Vieta
        CHECK(std::abs(r.y1 + r.y2 + r.y3 + coeffs[0]) < 1e-9);
        CHECK(std::abs(r.y1 * r.y2 * r.y3 + coeffs[2]) < 1e-9 * std::max(1.0, std::abs(coeffs[2])));
    }
}

TEST_CASE("quartic: (x^2 - 1)(x^2 - 4)") {
    const auto r = quartic_roots(0.0, -5.0, 0.0, 4.0);
    const auto got = sorted(r.roots());
    const std::vector<double> expected{-2.0, -1.0, 1.0, 2.0};
    for (int i = 0; i < 4; ++i) CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-13));
    CHECK(r.z > 0.0);
}

TEST_CASE("quartic: complex radicals are rejected") {
    CHECK_THROWS_AS(quartic_roots(0.0, 0.0, 0.0, 1.0), rabi::ComplexRadicalError);
    // x^4 + 5x^2 + 4: the third resolvent root gives z = 0.
    CHECK_THROWS_AS(quartic_roots(0.0, 5.0, 0.0, 4.0), rabi::ComplexRadicalError);
}

TEST_CASE("quartic: random four-real-root quartics vs companion matrix") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::vector<double> truth{dist(rng), dist(rng), dist(rng), dist(rng)};
        const auto c = rabi::oracle::poly_from_roots(truth);
        const auto r = quartic_roots(c[0], c[1], c[2], c[3]);
        const auto ref = rabi::oracle::companion_roots(c);
        const auto got = sorted(r.roots());
        for (int i = 0; i < 4; ++i) CHECK(std::abs(got[i] - ref[i].real()) < 1e-8);
        for (double x : r.roots()) CHECK(std::abs(rabi::eval_quartic(c[0], c[1], c[2], c[3], x)) < 1e-9);
        CHECK(std::abs(r.x1 + r.x2 + r.x3 + r.x4 + c[0]) < 1e-9);
        CHECK(std::abs(r.x1 * r.x2 * r.x3 * r.x4 - c[3]) < 1e-9 * std::max(1.0, std::abs(c[3])));
    }
}

TEST_CASE("roots are bit-for-bit deterministic") {
    const auto q = rabi::oracle::poly_from_roots({-1.1, 0.2, 0.9, 2.3});
    const auto a = quartic_roots(q[0], q[1], q[2], q[3]);
    const auto b = quartic_roots(q[0], q[1], q[2], q[3]);
    CHECK(a.roots() == b.roots());
    CHECK(a.resolvent_y == b.resolvent_y);
    const auto k = rabi::oracle::poly_from_roots({-0.4, 1.2, 2.3});
    const auto c = cubic_real_roots(k[0], k[1], k[2]);
    const auto d = cubic_real_roots(k[0], k[1], k[2]);
    CHECK(c.roots() == d.roots());
}
