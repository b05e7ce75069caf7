#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "chm/analysis.hpp"
#include "chm/rng.hpp"

using namespace chm;

TEST_CASE("envelope values at reference radii") {
    const Envelopes env;
    CHECK(env.h_growth(0.0).lower == 0.0);
    CHECK(env.h_growth(0.0).upper == 0.0);
    CHECK(std::abs(env.h_growth(0.5).upper - 1.5) < 1e-15);
    CHECK(std::abs(env.h_growth(0.5).lower - 0.5 * 1.25 / 2.25) < 1e-15);
    CHECK(std::abs(env.h_distortion(0.5).upper - 8.0) < 1e-15);
    CHECK(std::abs(env.h_distortion(0.5).lower - 1.0 / 3.375) < 1e-15);
    CHECK(std::abs(env.h_growth(0.9).upper - 49.5) < 1e-12);
    CHECK(std::abs(env.k_growth(0.5).upper - 1.0) < 1e-15);
    CHECK(std::abs(env.s_distortion(0.5).upper - 12.0) < 1e-15);
    CHECK(std::abs(env.p_growth(0.5).lower - 1.0 / 3.0) < 1e-15);
    CHECK_THROWS_AS(env.h_growth(1.0), RadiusOutOfRange);
    CHECK_THROWS_AS(env.h_growth(-0.1), RadiusOutOfRange);
}

TEST_CASE("envelope scale hook tightens both sides") {
    Envelopes env;
    env.scale = 0.9;
    const Envelopes sharp;
    CHECK(env.h_growth(0.5).upper < sharp.h_growth(0.5).upper);
    CHECK(env.h_growth(0.5).lower > sharp.h_growth(0.5).lower);
}

TEST_CASE("h bounds hold for L and members, fail under scaling") {
    const HarmonicMap L = harmonic_L();
    const auto cert = membership(L);
    const double radii[] = {0.1, 0.3, 0.5, 0.7, 0.9};
    std::vector<double> angles;
    for (int j = 0; j < 16; ++j) angles.push_back(2.0 * std::numbers::pi * j / 16);
    auto rep = check_h_bounds(L, cert, radii, angles);
    CHECK(rep.pass);
    CHECK(rep.worst_margin() > -1e-12);
    // |H(r)| attains the upper envelope on the positive axis: margin ~ 0
    CHECK(rep.worst_margin() < 1e-9);

    Envelopes tight;
    tight.scale = 0.9;
    CHECK(!check_h_bounds(L, cert, radii, angles, tight).pass);

    ClassMembership bad = cert;
    bad.in_K0H = false;
    CHECK_THROWS_AS(check_h_bounds(L, bad, radii, angles), MembershipNotCertified);
}

TEST_CASE("direction inequality for L at (0, 0)") {
    const HarmonicMap L = harmonic_L();
    std::vector<Complex> grid;
    for (double r : {0.3, 0.6, 0.9}) {
        for (int j = 0; j < 32; ++j) grid.push_back(std::polar(r, std::numbers::pi * j / 16));
    }
    // (h'+g')(1-z^2) = (1+z)/(1-z) has positive real part
    CHECK(css2_residual(L, 0.0, 0.0, grid) > 0.0);
    const auto dir = css2_search(L, grid, 90);
    CHECK(dir.min_residual >= css2_residual(L, 0.0, 0.0, grid) - 1e-9);

    const auto sum = sum_bound_search(L, grid);
    CHECK(sum.pass);
    CHECK(std::abs(sum.max_ratio - 1.0) < 1e-6);  // equality map: the bound is attained
}

TEST_CASE("herglotz representation round trip") {
    // q = (1+z)/(1-z): Herglotz with alpha = 0, delta = z
    auto q = make_analytic_sampled(
        "q", [](Complex z) { return (1.0 + z) / (1.0 - z); },
        numerical_derivative([](Complex z) { return (1.0 + z) / (1.0 - z); }), 32, 0.6);
    const auto delta = herglotz_delta(q, 0.0);
    SplitMix64 rng(77);
    for (int j = 0; j < 20; ++j) {
        const Complex z = rng.in_disk(0.9);
        CHECK(std::abs(delta(z) - z) < 1e-12);
    }
    CHECK(std::abs(delta.series.coeff(1) - 1.0) < 1e-8);

    CHECK_THROWS_AS(herglotz_delta(q, 2.0), DegenerateAlpha);
    auto not_herglotz = make_analytic_sampled(
        "bad", [](Complex z) { return 1.0 + 5.0 * z; },
        [](Complex) { return Complex(5.0, 0); }, 8, 0.5);
    CHECK_THROWS_AS(herglotz_delta(not_herglotz, 0.0), NotHerglotz);
}

TEST_CASE("coefficient bounds with equality for L") {
    const auto rep = coefficient_check(harmonic_L(), 12);
    CHECK(rep.pass);
    // every coefficient of L attains its bound
    for (const auto& s : rep.samples) CHECK(std::abs(s.upper_margin) < 1e-10);

    const auto strict = coefficient_check(shear(strip_map(), monomial_dilatation(0.5, 1), 0.0), 12);
    CHECK(strict.pass);
    CHECK(strict.worst_margin() > 1e-3);  // strictly inside the bounds
}

TEST_CASE("bieberbach inequality and Koebe equality") {
    const auto k = bieberbach_check(koebe());
    CHECK(k.pass);
    CHECK(k.equality);
    const auto l = bieberbach_check(halfplane_l());
    CHECK(l.pass);
    CHECK(!l.equality);
}

TEST_CASE("level-curve convexity oracles") {
    CHECK(convex_curve_check(halfplane_l(), 0.9).convex);
    CHECK(convex_curve_check(strip_map(), 0.9).convex);
    // the Koebe radius of convexity is 2 - sqrt(3) ~ 0.268
    CHECK(convex_curve_check(koebe(), 0.25).convex);
    CHECK(!convex_curve_check(koebe(), 0.5).convex);
    CHECK(!convex_curve_check(koebe(), 0.99).convex);
    CHECK_THROWS_AS(convex_curve_check(koebe(), 1.5), RadiusOutOfRange);
}

TEST_CASE("direction convexity of the Koebe image") {
    // k(D_r) is convex in the horizontal direction but not the vertical one
    CHECK(direction_convexity_check(koebe(), 0.0, 0.9));
    CHECK(!direction_convexity_check(koebe(), std::numbers::pi / 2, 0.9));
}

TEST_CASE("covering radii of the extremal analytic parts") {
    const double rs[] = {0.99, 0.999};
    const auto covH = covering_radius(harmonic_L().h, rs);
    CHECK(std::abs(covH.estimate - 0.375) < 0.01);
    const auto covl = covering_radius(halfplane_l(), rs);
    CHECK(std::abs(covl.estimate - 0.5) < 0.01);
    // increases toward the limiting value 3/8
    CHECK(covH.per_radius[0].second <= covH.per_radius[1].second);
}

TEST_CASE("growth order of L") {
    const double rs[] = {0.9, 0.99, 0.999};
    const auto rows = growth_order_L(rs);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].second >= 0.4);
        if (i) CHECK(rows[i].second >= rows[i - 1].second - 1e-3);
    }
    CHECK(rows.back().second > 0.5);  // consistent with the liminf statement
}

TEST_CASE("refined distortion bound") {
    const HarmonicMap f = shear(strip_map(), blaschke_dilatation(Complex(0.2, 0.3)), 0.0);
    std::vector<Complex> grid;
    SplitMix64 rng(101);
    for (int j = 0; j < 40; ++j) grid.push_back(rng.in_disk(0.9));
    const auto rep = refined_distortion_check(f, grid);
    CHECK(rep.pass);
    // the refined bound dominates the plain envelope 1/(1+r)^3
    const Envelopes env;
    for (const auto& s : rep.samples) {
        CHECK(s.lower >= env.h_distortion(std::abs(s.z)).lower - 1e-15);
    }
}

TEST_CASE("rigidity probe detects rotations of L and nothing else") {
    const HarmonicMap L = harmonic_L();
    for (double t : {0.0, 0.9, 2.2}) {
        const auto rig = rigidity_probe(rotate_harmonic(L, std::polar(1.0, t)));
        CHECK(rig.shear_detected);
        CHECK(rig.matches_L);
        CHECK(!rig.violation);
        CHECK(rig.max_match_error < 1e-6);
    }
    const auto rig = rigidity_probe(shear(strip_map(), monomial_dilatation(1.0, 1), 0.0));
    CHECK(!rig.shear_detected);
    CHECK(!rig.violation);
    const auto rid = rigidity_probe(analytic_as_harmonic(identity_map()));
    CHECK(!rid.shear_detected);
    CHECK(!rid.violation);
}

TEST_CASE("sharpness table gaps vanish") {
    const double rs[] = {0.1, 0.5, 0.9};
    for (const auto& row : sharpness_table(rs)) CHECK(row.relative_gap < 1e-12);
}
