#include "chm/mappings.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "chm/quadrature.hpp"
#include "chm/rng.hpp"

namespace chm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_series_agreement(const std::string& label, const PointEvaluator& value,
                            const TruncatedSeries& series) {
    SplitMix64 rng(0x5eedc0de);
    for (int i = 0; i < 20; ++i) {
        const Complex z = rng.in_disk(0.5);
        const Complex v = value(z);
        const Complex s = evaluate(series, z);
        if (std::abs(v - s) > 1e-6 * (1.0 + std::abs(v))) {
            throw Error("AnalyticMap '" + label + "': evaluator and series disagree at |z|<=0.5");
        }
    }
}

std::vector<Complex> int_range_series(int order, const std::function<Complex(int)>& cn) {
    std::vector<Complex> c(order + 1);
    for (int n = 0; n <= order; ++n) c[n] = cn(n);
    return c;
}

}  // namespace

AnalyticMap make_analytic(std::string label, PointEvaluator value, PointEvaluator deriv,
                          TruncatedSeries series) {
    check_series_agreement(label, value, series);
    return AnalyticMap{std::move(label), std::move(value), std::move(deriv), std::move(series)};
}

AnalyticMap make_analytic_sampled(std::string label, PointEvaluator value, PointEvaluator deriv,
                                  int order, double rho) {
    TruncatedSeries s = extract_coeffs(value, order, rho);
    return make_analytic(std::move(label), std::move(value), std::move(deriv), std::move(s));
}

PointEvaluator numerical_derivative(PointEvaluator value, double step) {
    return [value = std::move(value), step](Complex z) {
        auto central = [&](double h) {
            return (value(z + Complex(h, 0)) - value(z - Complex(h, 0))) / (2.0 * h);
        };
        const Complex d1 = central(step);
        const Complex d2 = central(0.5 * step);
        return (4.0 * d2 - d1) / 3.0;
    };
}

Complex evaluate_harmonic(const HarmonicMap& f, Complex z) {
    return f.h.value(z) + std::conj(f.g.value(z));
}

std::vector<Complex> sample_circle(const HarmonicMap& f, double r, int M) {
    std::vector<Complex> w(M);
    for (int m = 0; m < M; ++m) {
        const double t = kTwoPi * m / M;
        w[m] = evaluate_harmonic(f, Complex(r * std::cos(t), r * std::sin(t)));
    }
    return w;
}

std::vector<Complex> sample_circle(const AnalyticMap& phi, double r, int M) {
    std::vector<Complex> w(M);
    for (int m = 0; m < M; ++m) {
        const double t = kTwoPi * m / M;
        w[m] = phi.value(Complex(r * std::cos(t), r * std::sin(t)));
    }
    return w;
}

// ---- catalog ----

AnalyticMap koebe(int order) {
    auto value = [](Complex z) { return z / ((1.0 - z) * (1.0 - z)); };
    auto deriv = [](Complex z) { return (1.0 + z) / std::pow(1.0 - z, 3); };
    TruncatedSeries s(int_range_series(order, [](int n) { return Complex(n, 0); }));
    return make_analytic("koebe", value, deriv, std::move(s));
}

AnalyticMap halfplane_l(int order) {
    auto value = [](Complex z) { return z / (1.0 - z); };
    auto deriv = [](Complex z) { return 1.0 / ((1.0 - z) * (1.0 - z)); };
    TruncatedSeries s(int_range_series(order, [](int n) { return Complex(n > 0 ? 1 : 0, 0); }));
    return make_analytic("halfplane-l", value, deriv, std::move(s));
}

AnalyticMap strip_map(int order) {
    auto value = [](Complex z) { return 0.5 * std::log((1.0 + z) / (1.0 - z)); };
    auto deriv = [](Complex z) { return 1.0 / (1.0 - z * z); };
    TruncatedSeries s(int_range_series(
        order, [](int n) { return (n % 2 == 1) ? Complex(1.0 / n, 0) : Complex{}; }));
    return make_analytic("strip", value, deriv, std::move(s));
}

AnalyticMap identity_map(int order) {
    return make_analytic(
        "identity", [](Complex z) { return z; }, [](Complex) { return Complex(1, 0); },
        TruncatedSeries::identity(order));
}

AnalyticMap zero_map(int order) {
    return AnalyticMap{"zero", [](Complex) { return Complex{}; },
                       [](Complex) { return Complex{}; }, TruncatedSeries::zero(order)};
}

HarmonicMap harmonic_L(int order) {
    auto Hv = [](Complex z) { return (2.0 * z - z * z) / (2.0 * (1.0 - z) * (1.0 - z)); };
    auto Hp = [](Complex z) { return 1.0 / std::pow(1.0 - z, 3); };
    auto Gv = [](Complex z) { return -z * z / (2.0 * (1.0 - z) * (1.0 - z)); };
    auto Gp = [](Complex z) { return -z / std::pow(1.0 - z, 3); };
    TruncatedSeries Hs(int_range_series(
        order, [](int n) { return n > 0 ? Complex(0.5 * (n + 1), 0) : Complex{}; }));
    TruncatedSeries Gs(int_range_series(
        order, [](int n) { return n > 0 ? Complex(0.5 * (1 - n), 0) : Complex{}; }));
    return HarmonicMap{"harmonic-L", make_analytic("H", Hv, Hp, std::move(Hs)),
                       make_analytic("G", Gv, Gp, std::move(Gs))};
}

HarmonicMap analytic_as_harmonic(const AnalyticMap& phi) {
    return HarmonicMap{phi.label, phi, zero_map(phi.series.order())};
}

AnalyticMap monomial_dilatation(Complex c, int m, int order) {
    if (m < 1) throw Error("monomial_dilatation: exponent must be >= 1");
    if (std::abs(c) > 1.0 + 1e-12) throw Error("monomial_dilatation: |c| must be <= 1");
    auto value = [c, m](Complex z) { return c * std::pow(z, m); };
    auto deriv = [c, m](Complex z) { return c * static_cast<double>(m) * std::pow(z, m - 1); };
    return make_analytic("dil(" + std::to_string(c.real()) + "+" + std::to_string(c.imag()) +
                             "i)z^" + std::to_string(m),
                         value, deriv, TruncatedSeries::monomial(c, m, order));
}

AnalyticMap blaschke_dilatation(Complex c, int order) {
    if (std::abs(c) >= 1.0) throw Error("blaschke_dilatation: |c| must be < 1");
    const Complex cb = std::conj(c);
    auto B = [c, cb](Complex z) { return (c + z) / (1.0 + cb * z); };
    auto value = [B](Complex z) { return z * B(z); };
    auto deriv = [B, c, cb](Complex z) {
        const Complex den = 1.0 + cb * z;
        return B(z) + z * (1.0 - cb * c) / (den * den);
    };
    TruncatedSeries num = TruncatedSeries::monomial(c, 1, order);
    num = add(num, TruncatedSeries::monomial(1.0, 2, order));
    TruncatedSeries den = TruncatedSeries::constant(1.0, order);
    den = add(den, TruncatedSeries::monomial(cb, 1, order));
    return make_analytic("dil-blaschke(" + std::to_string(c.real()) + "+" +
                             std::to_string(c.imag()) + "i)",
                         value, deriv, div(num, den));
}

// ---- transformations ----

namespace {

void require_unimodular(Complex lambda) {
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12) {
        throw NotUnimodular("rotation parameter must satisfy |lambda| = 1");
    }
}

TruncatedSeries rotate_series(const TruncatedSeries& s, Complex pre, Complex lambda) {
    std::vector<Complex> c(s.coeffs());
    Complex lp = 1.0;
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] *= pre * lp;
        lp *= lambda;
    }
    return TruncatedSeries(std::move(c));
}

}  // namespace

AnalyticMap rotate_analytic(const AnalyticMap& phi, Complex lambda) {
    require_unimodular(lambda);
    const Complex lb = std::conj(lambda);
    auto value = [v = phi.value, lambda, lb](Complex z) { return lb * v(lambda * z); };
    auto deriv = [d = phi.deriv, lambda](Complex z) { return d(lambda * z); };
    return AnalyticMap{phi.label + "-rot", value, deriv, rotate_series(phi.series, lb, lambda)};
}

HarmonicMap rotate_harmonic(const HarmonicMap& f, Complex lambda) {
    require_unimodular(lambda);
    AnalyticMap h = rotate_analytic(f.h, lambda);
    // g_lambda(z) = lambda g(lambda z)
    auto gv = [v = f.g.value, lambda](Complex z) { return lambda * v(lambda * z); };
    auto gd = [d = f.g.deriv, lambda](Complex z) { return lambda * lambda * d(lambda * z); };
    AnalyticMap g{f.g.label + "-rot", gv, gd, rotate_series(f.g.series, lambda, lambda)};
    return HarmonicMap{f.label + "-rot", std::move(h), std::move(g)};
}

AnalyticMap dilatation(const HarmonicMap& f) {
    for (double r : {0.2, 0.5, 0.8, 0.95}) {
        for (int j = 0; j < 16; ++j) {
            const double t = kTwoPi * j / 16;
            const Complex z(r * std::cos(t), r * std::sin(t));
            if (std::abs(f.h.deriv(z)) < 1e-8) {
                throw VanishingDerivative("dilatation: h' vanishes on the validation grid");
            }
        }
    }
    auto value = [hp = f.h.deriv, gp = f.g.deriv](Complex z) { return gp(z) / hp(z); };
    TruncatedSeries s = div(differentiate(f.g.series), differentiate(f.h.series));
    return AnalyticMap{"dilatation(" + f.label + ")", value, numerical_derivative(value),
                       std::move(s)};
}

HarmonicMap shear(const AnalyticMap& phi, const AnalyticMap& omega, double theta) {
    const Complex e2 = std::polar(1.0, 2.0 * theta);
    if (std::abs(omega.value(Complex{})) > 1e-10) {
        throw Error("shear: dilatation must fix the origin");
    }
    if (std::abs(phi.value(Complex{})) > 1e-8 || std::abs(phi.deriv(Complex{}) - 1.0) > 1e-8) {
        throw Error("shear: base map must be normalized (phi(0)=0, phi'(0)=1)");
    }
    for (double r : {0.3, 0.6, 0.9, 0.99}) {
        for (int j = 0; j < 32; ++j) {
            const double t = kTwoPi * j / 32;
            const Complex z(r * std::cos(t), r * std::sin(t));
            const Complex w = omega.value(z);
            if (std::abs(w) >= 1.0) throw Error("shear: |omega| >= 1 on the grid");
            if (std::abs(1.0 - e2 * w) < 1e-6) {
                throw DenominatorVanishes("shear: 1 - e^{2i theta} omega vanishes on the grid");
            }
        }
    }

    auto hp = [pd = phi.deriv, ov = omega.value, e2](Complex z) {
        return pd(z) / (1.0 - e2 * ov(z));
    };
    auto gp = [hp, ov = omega.value](Complex z) { return ov(z) * hp(z); };
    auto hv = [hp](Complex z) { return integrate_radial(hp, z); };
    auto gv = [gp](Complex z) { return integrate_radial(gp, z); };

    TruncatedSeries den = sub(TruncatedSeries::constant(1.0, omega.series.order()),
                              scale(omega.series, e2));
    TruncatedSeries hp_s = div(differentiate(phi.series), den);
    TruncatedSeries h_s = integrate_from_zero(hp_s);
    TruncatedSeries g_s = integrate_from_zero(mul(omega.series, hp_s));

    const std::string label = "shear(" + phi.label + "," + omega.label + ")";
    return HarmonicMap{label, make_analytic(label + ".h", hv, hp, std::move(h_s)),
                       make_analytic(label + ".g", gv, gp, std::move(g_s))};
}

// ---- membership ----

ClassMembership membership(const HarmonicMap& f, const MembershipConfig& cfg) {
    ClassMembership out;
    out.probe_radius = cfg.probe_radius;
    out.curve_samples = cfg.curve_samples;

    double res = std::abs(f.h.value(Complex{}));
    res = std::max(res, std::abs(f.g.value(Complex{})));
    res = std::max(res, std::abs(f.h.deriv(Complex{}) - 1.0));
    out.max_normalization_residual = res;
    out.normalization_ok = res <= cfg.norm_tol;
    out.g_prime0_zero = std::abs(f.g.deriv(Complex{})) <= cfg.norm_tol;

    double minJ = std::numeric_limits<double>::infinity();
    for (double r : cfg.jacobian_radii) {
        for (int j = 0; j < cfg.jacobian_angles; ++j) {
            const double t = kTwoPi * j / cfg.jacobian_angles;
            const Complex z(r * std::cos(t), r * std::sin(t));
            const double hp = std::abs(f.h.deriv(z));
            const double gp = std::abs(f.g.deriv(z));
            minJ = std::min(minJ, hp * hp - gp * gp);
        }
    }
    out.min_jacobian = minJ;
    out.orientation_ok = minJ > 0.0;

    const std::vector<Complex> curve = sample_circle(f, cfg.probe_radius, cfg.curve_samples);
    std::vector<Complex> pts;
    for (double r : cfg.interior_radii) {
        for (int j = 0; j < cfg.interior_angles; ++j) {
            const double t = kTwoPi * j / cfg.interior_angles;
            pts.push_back(evaluate_harmonic(f, Complex(r * std::cos(t), r * std::sin(t))));
        }
    }
    int bad = 0, total = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Complex mid = cfg.shrink * 0.5 * (pts[i] + pts[j]);
            ++total;
            if (!point_inside_polygon(curve, mid)) ++bad;
        }
    }
    out.bad_midpoints = bad;
    out.total_midpoints = total;
    out.convex_image = bad == 0;

    out.in_KH = out.normalization_ok && out.orientation_ok && out.convex_image;
    out.in_K0H = out.in_KH && out.g_prime0_zero;
    return out;
}

}  // namespace chm
