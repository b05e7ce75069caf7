#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "chm/rng.hpp"
#include "chm/series.hpp"

using namespace chm;

namespace {

TruncatedSeries random_series(SplitMix64& rng, int order, double mag = 1.0) {
    std::vector<Complex> c(order + 1);
    for (auto& x : c) x = mag * rng.in_disk(1.0);
    return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("factories and accessors") {
    auto s = TruncatedSeries::monomial(Complex(2, -1), 3, 8);
    CHECK(s.order() == 8);
    CHECK(s.coeff(3) == Complex(2, -1));
    CHECK(s.coeff(4) == Complex{});
    CHECK(s.coeff(100) == Complex{});  // past the truncation order
    CHECK(TruncatedSeries::identity(4).coeff(1) == Complex(1, 0));
    CHECK(TruncatedSeries::constant(Complex(5, 0), 4).coeff(0) == Complex(5, 0));
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Complex>{}), Error);
    CHECK_THROWS_AS(TruncatedSeries({Complex(std::nan(""), 0)}), Error);
}

TEST_CASE("arithmetic on small known series") {
    // (1 + z)^2 = 1 + 2z + z^2
    auto one_plus_z = TruncatedSeries({1.0, 1.0, 0.0});
    auto sq = mul(one_plus_z, one_plus_z);
    CHECK(sq.coeff(0) == Complex(1, 0));
    CHECK(sq.coeff(1) == Complex(2, 0));
    CHECK(sq.coeff(2) == Complex(1, 0));

    auto diff = differentiate(sq);
    CHECK(diff.coeff(0) == Complex(2, 0));
    CHECK(diff.coeff(1) == Complex(2, 0));

    auto anti = integrate_from_zero(diff);
    CHECK(anti.coeff(0) == Complex{});
    CHECK(anti.coeff(1) == Complex(2, 0));
    CHECK(anti.coeff(2) == Complex(1, 0));
}

TEST_CASE("geometric series division") {
    // 1 / (1 - z) = sum z^n
    auto num = TruncatedSeries::constant(1.0, 20);
    auto den = TruncatedSeries({1.0, -1.0});
    auto q = div(num, den);
    for (int n = 0; n <= 20; ++n) CHECK(std::abs(q.coeff(n) - 1.0) < 1e-14);
    CHECK_THROWS_AS(div(num, TruncatedSeries({Complex(1e-13, 0), 1.0})), NearZeroConstantTerm);
}

TEST_CASE("mul/div round trip (property)") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_series(rng, 16);
        auto b = random_series(rng, 16);
        // keep b invertible
        std::vector<Complex> bc = b.coeffs();
        bc[0] = 1.0 + rng.in_disk(0.5);
        b = TruncatedSeries(bc);
        auto q = div(mul(a, b), b);
        for (int n = 0; n <= 16; ++n) CHECK(std::abs(q.coeff(n) - a.coeff(n)) < 1e-10);
    }
}

TEST_CASE("evaluate agrees with direct Horner and respects the disk") {
    SplitMix64 rng(7);
    auto a = random_series(rng, 24);
    for (int trial = 0; trial < 20; ++trial) {
        const Complex z = rng.in_disk(0.9);
        Complex ref{};
        for (int n = 24; n >= 0; --n) ref = ref * z + a.coeff(n);
        CHECK(std::abs(evaluate(a, z) - ref) < 1e-12);
    }
    CHECK_THROWS_AS(evaluate(a, Complex(0.97, 0)), OutsideEvaluationDisk);
}

TEST_CASE("mul against brute-force convolution (property)") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_series(rng, 12);
        auto b = random_series(rng, 12);
        auto c = mul(a, b);
        for (int n = 0; n <= 12; ++n) {
            Complex ref{};
            for (int k = 0; k <= n; ++k) ref += a.coeff(k) * b.coeff(n - k);
            CHECK(std::abs(c.coeff(n) - ref) < 1e-12);
        }
    }
}

TEST_CASE("composition with inner fixing zero") {
    // outer(w) = 1/(1-w) truncated, inner = z/(1-z) truncated:
    // 1/(1 - z/(1-z)) = (1-z)/(1-2z) = 1 + z + 2z^2 + 4z^3 + ... (c_n = 2^{n-1})
    std::vector<Complex> oc(12, 1.0), ic(13, 1.0);
    ic[0] = 0.0;
    auto comp = compose_inner_zero(TruncatedSeries(oc), TruncatedSeries(ic));
    CHECK(std::abs(comp.coeff(0) - 1.0) < 1e-12);
    for (int n = 1; n <= 11; ++n) {
        CHECK(std::abs(comp.coeff(n) - std::pow(2.0, n - 1)) < 1e-9 * std::pow(2.0, n));
    }
    CHECK_THROWS_AS(compose_inner_zero(TruncatedSeries(oc), TruncatedSeries({0.5, 1.0})),
                    NonzeroInnerConstant);
}

TEST_CASE("compose agrees with pointwise evaluation (property)") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        auto outer = random_series(rng, 16);
        auto inner = random_series(rng, 16, 0.3);
        std::vector<Complex> ic = inner.coeffs();
        ic[0] = 0.0;
        inner = TruncatedSeries(ic);
        auto comp = compose_inner_zero(outer, inner);
        // compare only well inside: the truncation error of the composition is
        // controlled by |inner(z)| < 0.3/(1-0.3)
        const Complex z = rng.in_disk(0.4);
        const Complex ref = evaluate(outer, evaluate(inner, z));
        CHECK(std::abs(evaluate(comp, z) - ref) < 1e-6);
    }
}

TEST_CASE("extract_coeffs recovers a polynomial exactly") {
    SplitMix64 rng(19);
    auto a = random_series(rng, 10);
    auto eval = [&a](Complex z) { return evaluate(a, z); };
    auto rec = extract_coeffs(eval, 10, 0.7);
    for (int n = 0; n <= 10; ++n) CHECK(std::abs(rec.coeff(n) - a.coeff(n)) < 1e-11);
}

TEST_CASE("extract_coeffs flags heavy aliasing") {
    // function with slowly decaying coefficients sampled at tiny order
    auto eval = [](Complex z) { return 1.0 / ((1.0 - z) * (1.0 - z)); };
    CHECK_THROWS_AS(extract_coeffs(eval, 2, 0.9, 1), AliasingTooLarge);
}

TEST_CASE("high-precision extraction at small radius") {
    auto eval = [](ComplexHP z) { return z / ((1.0L - z) * (1.0L - z)); };
    auto rec = extract_coeffs(eval, 32, 0.5);
    for (int n = 1; n <= 32; ++n) {
        CHECK(std::abs(rec.coeff(n) - static_cast<double>(n)) < 1e-9);
    }
}
