#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "chm/mappings.hpp"
#include "chm/rng.hpp"

using namespace chm;

namespace {

double map_distance(const HarmonicMap& a, const HarmonicMap& b, double rmax = 0.9, int pts = 50) {
    double worst = 0;
    for (int j = 0; j < pts; ++j) {
        const double r = 0.05 + (rmax - 0.05) * (j % 10) / 9.0;
        const double t = 2.0 * std::numbers::pi * j / pts;
        const Complex z = std::polar(r, t);
        worst = std::max(worst, std::abs(evaluate_harmonic(a, z) - evaluate_harmonic(b, z)));
    }
    return worst;
}

}  // namespace

TEST_CASE("canonical catalog values") {
    const Complex half(0.5, 0);
    CHECK(std::abs(koebe()(half) - 2.0) < 1e-14);
    CHECK(std::abs(halfplane_l()(half) - 1.0) < 1e-14);
    CHECK(std::abs(strip_map()(half) - 0.5 * std::log(3.0)) < 1e-14);
    const HarmonicMap L = harmonic_L();
    CHECK(std::abs(L.h(half) - 1.5) < 1e-14);   // H = (l+k)/2
    CHECK(std::abs(L.g(half) + 0.5) < 1e-14);   // G = (l-k)/2
    CHECK(std::abs(evaluate_harmonic(L, half) - 1.0) < 1e-14);  // L = l on the real axis
}

TEST_CASE("catalog series coefficients") {
    const auto k = koebe();
    const auto l = halfplane_l();
    const auto s = strip_map();
    const HarmonicMap L = harmonic_L();
    for (int n = 1; n <= 10; ++n) {
        CHECK(std::abs(k.series.coeff(n) - double(n)) < 1e-10);
        CHECK(std::abs(l.series.coeff(n) - 1.0) < 1e-10);
        CHECK(std::abs(s.series.coeff(n) - (n % 2 ? 1.0 / n : 0.0)) < 1e-10);
        CHECK(std::abs(L.h.series.coeff(n) - 0.5 * (n + 1)) < 1e-10);
        CHECK(std::abs(L.g.series.coeff(n) - 0.5 * (1 - n)) < 1e-10);
    }
}

TEST_CASE("make_analytic rejects inconsistent evaluator/series pairs") {
    CHECK_THROWS_AS(make_analytic("bad", [](Complex z) { return z; },
                                  [](Complex) { return Complex(1, 0); },
                                  TruncatedSeries::monomial(2.0, 1, 8)),
                    Error);
}

TEST_CASE("rotations") {
    const Complex lam = std::polar(1.0, 0.8);
    const auto k = koebe();
    const auto krot = rotate_analytic(k, lam);
    SplitMix64 rng(5);
    for (int j = 0; j < 20; ++j) {
        const Complex z = rng.in_disk(0.9);
        CHECK(std::abs(krot(z) - std::conj(lam) * k(lam * z)) < 1e-12);
    }
    // rotation preserves the normalization
    CHECK(std::abs(krot.series.coeff(0)) < 1e-12);
    CHECK(std::abs(krot.series.coeff(1) - 1.0) < 1e-12);

    const HarmonicMap L = harmonic_L();
    const HarmonicMap Lrot = rotate_harmonic(L, lam);
    for (int j = 0; j < 20; ++j) {
        const Complex z = rng.in_disk(0.9);
        const Complex ref = std::conj(lam) * evaluate_harmonic(L, lam * z);
        CHECK(std::abs(evaluate_harmonic(Lrot, z) - ref) < 1e-12);
    }
}

TEST_CASE("shear of the Koebe function with omega = -z gives L") {
    const HarmonicMap f = shear(koebe(), monomial_dilatation(-1.0, 1), 0.0);
    CHECK(map_distance(f, harmonic_L()) < 1e-10);
}

TEST_CASE("shear invariants h - e^{2i theta} g = phi and g' = omega h'") {
    const auto phi = strip_map();
    const auto om = blaschke_dilatation(Complex(-0.2, 0.4));
    const double theta = 0.6;
    const HarmonicMap f = shear(phi, om, theta);
    const Complex e2 = std::polar(1.0, 2.0 * theta);
    SplitMix64 rng(9);
    for (int j = 0; j < 30; ++j) {
        const Complex z = rng.in_disk(0.9);
        CHECK(std::abs(f.h(z) - e2 * f.g(z) - phi(z)) < 1e-10);
        CHECK(std::abs(f.g.deriv(z) - om(z) * f.h.deriv(z)) < 1e-10);
    }
}

TEST_CASE("shear validates the dilatation") {
    // |omega| = 1 with e^{2i theta} omega hitting 1 on the grid
    CHECK_THROWS_AS(shear(koebe(), monomial_dilatation(1.0, 0), 0.0), Error);
}

TEST_CASE("dilatation of L is -z") {
    const auto w = dilatation(harmonic_L());
    CHECK(std::abs(w.series.coeff(1) + 1.0) < 1e-10);
    for (int n = 2; n <= 30; ++n) CHECK(std::abs(w.series.coeff(n)) < 1e-10);
    SplitMix64 rng(13);
    for (int j = 0; j < 20; ++j) {
        const Complex z = rng.in_disk(0.9);
        CHECK(std::abs(w(z) + z) < 1e-12);
    }
}

TEST_CASE("membership certification") {
    const auto cL = membership(harmonic_L());
    CHECK(cL.normalization_ok);
    CHECK(cL.orientation_ok);
    CHECK(cL.convex_image);
    CHECK(cL.g_prime0_zero);
    CHECK(cL.in_K0H);
    CHECK(cL.bad_midpoints == 0);
    CHECK(cL.min_jacobian > 0);

    CHECK(membership(analytic_as_harmonic(identity_map())).in_K0H);
    CHECK(membership(analytic_as_harmonic(halfplane_l())).in_K0H);
    CHECK(membership(analytic_as_harmonic(strip_map())).in_K0H);

    // the Koebe function is univalent but nowhere near convex
    const auto ck = membership(analytic_as_harmonic(koebe()));
    CHECK(!ck.convex_image);
    CHECK(!ck.in_K0H);

    // shear of k with omega = +z leaves the convex class
    CHECK(!membership(shear(koebe(), monomial_dilatation(1.0, 1), 0.0)).in_K0H);
}

TEST_CASE("membership is rotation invariant") {
    const HarmonicMap L = harmonic_L();
    for (double t : {0.5, 1.7, 3.0}) {
        CHECK(membership(rotate_harmonic(L, std::polar(1.0, t))).in_K0H);
    }
}

TEST_CASE("strip shears stay in the class for arbitrary dilatations") {
    const auto s = strip_map();
    CHECK(membership(shear(s, monomial_dilatation(1.0, 1), 0.0)).in_K0H);
    CHECK(membership(shear(s, monomial_dilatation(Complex(0, 0.7), 2), 0.0)).in_K0H);
    CHECK(membership(shear(s, blaschke_dilatation(Complex(0.3, 0)), 0.0)).in_K0H);
}
