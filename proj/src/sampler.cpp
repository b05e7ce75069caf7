#include "chm/sampler.hpp"

#include <cmath>
#include <numbers>

namespace chm {

namespace {

void push(std::vector<CatalogEntry>& out, HarmonicMap f, bool expected) {
    ClassMembership cert = membership(f);
    out.push_back({std::move(f), cert, expected});
}

}  // namespace

std::vector<CatalogEntry> build_sample_catalog(const SamplerConfig& cfg) {
    const int N = cfg.order;
    std::vector<CatalogEntry> out;

    const AnalyticMap ident = identity_map(N);
    const AnalyticMap ell = halfplane_l(N);
    const AnalyticMap strip = strip_map(N);
    const AnalyticMap k = koebe(N);

    // analytic convex maps viewed as harmonic ones (omega = 0)
    push(out, analytic_as_harmonic(ident), true);
    push(out, analytic_as_harmonic(ell), true);
    push(out, analytic_as_harmonic(strip), true);
    for (double t : {0.7, 2.1}) {
        push(out, analytic_as_harmonic(rotate_analytic(ell, std::polar(1.0, t))), true);
        push(out, analytic_as_harmonic(rotate_analytic(strip, std::polar(1.0, t))), true);
    }

    // the half-plane harmonic mapping and its rotations
    const HarmonicMap L = harmonic_L(N);
    push(out, L, true);
    for (int j = 1; j < 8; ++j) {
        const double t = std::numbers::pi * j / 4.0;
        push(out, rotate_harmonic(L, std::polar(1.0, t)), true);
    }

    // strip shears: every admissible dilatation keeps Im f inside the strip
    auto strip_shear = [&](const AnalyticMap& om) { push(out, shear(strip, om, 0.0), true); };
    strip_shear(monomial_dilatation(1.0, 1, N));
    strip_shear(monomial_dilatation(-1.0, 1, N));
    strip_shear(monomial_dilatation(Complex(0, 1), 1, N));
    strip_shear(monomial_dilatation(0.5, 1, N));
    strip_shear(monomial_dilatation(Complex(0, 0.5), 1, N));
    strip_shear(monomial_dilatation(-0.7, 1, N));
    strip_shear(monomial_dilatation(1.0, 2, N));
    strip_shear(monomial_dilatation(-1.0, 2, N));
    strip_shear(monomial_dilatation(Complex(0, 0.7), 2, N));
    strip_shear(monomial_dilatation(1.0, 3, N));
    strip_shear(monomial_dilatation(-1.0, 3, N));
    strip_shear(blaschke_dilatation(0.3, N));
    strip_shear(blaschke_dilatation(Complex(0, 0.5), N));
    strip_shear(blaschke_dilatation(Complex(-0.2, 0.4), N));

    // identity shears with mild dilatations
    push(out, shear(ident, monomial_dilatation(0.5, 1, N), 0.0), true);
    push(out, shear(ident, monomial_dilatation(Complex(0, 0.5), 1, N), 0.0), true);

    // RNG-drawn strip shears
    SplitMix64 rng(cfg.seed);
    for (int j = 0; j < cfg.random_extra; ++j) {
        if (j % 2 == 0) {
            strip_shear(blaschke_dilatation(rng.in_disk(0.6), N));
        } else {
            strip_shear(monomial_dilatation(rng.in_disk(1.0), 1 + static_cast<int>(rng.next() % 3), N));
        }
    }

    // negative controls: genuinely outside the convex class
    push(out, analytic_as_harmonic(k), false);
    push(out, shear(k, monomial_dilatation(1.0, 1, N), 0.0), false);
    push(out, shear(ell, monomial_dilatation(1.0, 1, N), 0.0), false);
    return out;
}

std::vector<CatalogEntry> certified_members(const std::vector<CatalogEntry>& catalog) {
    std::vector<CatalogEntry> out;
    for (const auto& e : catalog) {
        if (e.cert.in_K0H) out.push_back(e);
    }
    return out;
}

}  // namespace chm
