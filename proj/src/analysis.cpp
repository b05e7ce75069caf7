#include "chm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace chm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_radius(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw RadiusOutOfRange("envelope radius must be in [0,1)");
}

void require_certified(const ClassMembership& cert) {
    if (!cert.in_K0H) throw MembershipNotCertified("operation requires a certified K_H^0 member");
}

// Golden-section minimization on [a, b].
template <typename F>
double golden_min(F&& fn, double a, double b, int iters = 80) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = fn(x1), f2 = fn(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = fn(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = fn(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

std::vector<Complex> default_grid(std::initializer_list<double> radii, int angles) {
    std::vector<Complex> g;
    for (double r : radii) {
        for (int j = 0; j < angles; ++j) {
            const double t = kTwoPi * j / angles;
            g.emplace_back(r * std::cos(t), r * std::sin(t));
        }
    }
    return g;
}

}  // namespace

// ---- envelopes ----

EnvelopePair Envelopes::k_growth(double r) const {
    require_radius(r);
    return {r / (1 + r) / scale, scale * r / (1 - r)};
}
EnvelopePair Envelopes::k_distortion(double r) const {
    require_radius(r);
    return {1 / ((1 + r) * (1 + r)) / scale, scale / ((1 - r) * (1 - r))};
}
EnvelopePair Envelopes::s_growth(double r) const {
    require_radius(r);
    return {r / ((1 + r) * (1 + r)) / scale, scale * r / ((1 - r) * (1 - r))};
}
EnvelopePair Envelopes::s_distortion(double r) const {
    require_radius(r);
    return {(1 - r) / std::pow(1 + r, 3) / scale, scale * (1 + r) / std::pow(1 - r, 3)};
}
EnvelopePair Envelopes::p_growth(double r) const {
    require_radius(r);
    return {(1 - r) / (1 + r) / scale, scale * (1 + r) / (1 - r)};
}
EnvelopePair Envelopes::f_growth(double r) const {
    require_radius(r);
    return {r / ((1 + r) * (1 + r)) / scale, scale * r / ((1 - r) * (1 - r))};
}
EnvelopePair Envelopes::h_growth(double r) const {
    require_radius(r);
    return {(2 * r + r * r) / (2 * (1 + r) * (1 + r)) / scale,
            scale * (2 * r - r * r) / (2 * (1 - r) * (1 - r))};
}
EnvelopePair Envelopes::h_distortion(double r) const {
    require_radius(r);
    return {1 / std::pow(1 + r, 3) / scale, scale / std::pow(1 - r, 3)};
}

// ---- bound reports ----

void BoundReport::add(Complex z, double measured, double lower, double upper) {
    BoundSample s;
    s.z = z;
    s.measured = measured;
    s.lower = lower;
    s.upper = upper;
    s.lower_margin = measured - lower;
    s.upper_margin = upper - measured;
    s.pass = s.lower_margin >= -tolerance && s.upper_margin >= -tolerance;
    pass = pass && s.pass;
    samples.push_back(s);
}

double BoundReport::worst_margin() const {
    double w = std::numeric_limits<double>::infinity();
    for (const auto& s : samples) w = std::min(w, std::min(s.lower_margin, s.upper_margin));
    return w;
}

BoundReport check_h_bounds(const HarmonicMap& f, const ClassMembership& cert,
                           std::span<const double> radii, std::span<const double> angles,
                           const Envelopes& env, double tol) {
    require_certified(cert);
    BoundReport rep;
    rep.tolerance = tol;
    rep.pass = true;
    for (double r : radii) {
        const EnvelopePair growth = env.h_growth(r);
        const EnvelopePair dist = env.h_distortion(r);
        const EnvelopePair sg = env.s_growth(r);
        const EnvelopePair sd = env.s_distortion(r);
        for (double t : angles) {
            const Complex z(r * std::cos(t), r * std::sin(t));
            const double hv = std::abs(f.h.value(z));
            const double hd = std::abs(f.h.deriv(z));
            rep.add(z, hv, growth.lower, growth.upper);
            rep.add(z, hd, dist.lower, dist.upper);
            // the class-S envelopes are strictly weaker; checked for consistency
            rep.add(z, hv, sg.lower, sg.upper);
            rep.add(z, hd, sd.lower, sd.upper);
        }
    }
    return rep;
}

BoundReport check_sum_bound(const HarmonicMap& f, double alpha, std::span<const Complex> grid,
                            double tol) {
    const Complex e2a = std::polar(1.0, -2.0 * alpha);
    BoundReport rep;
    rep.tolerance = tol;
    rep.pass = true;
    for (const Complex& z : grid) {
        const double r = std::abs(z);
        const double measured = std::abs(f.h.deriv(z) + e2a * f.g.deriv(z));
        rep.add(z, measured, 0.0, 1.0 / ((1 - r) * (1 - r)));
    }
    return rep;
}

SumBoundResult sum_bound_search(const HarmonicMap& f, std::span<const Complex> grid,
                                int angle_steps, double tol) {
    const std::size_t n = grid.size();
    std::vector<Complex> hp(n), gp(n);
    std::vector<double> env(n);
    for (std::size_t i = 0; i < n; ++i) {
        hp[i] = f.h.deriv(grid[i]);
        gp[i] = f.g.deriv(grid[i]);
        const double r = std::abs(grid[i]);
        env[i] = (1 - r) * (1 - r);
    }
    auto worst_ratio = [&](double a) {
        const Complex e2a = std::polar(1.0, -2.0 * a);
        double mx = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            mx = std::max(mx, std::abs(hp[i] + e2a * gp[i]) * env[i]);
        }
        return mx;
    };
    double best_a = 0, best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < angle_steps; ++j) {
        const double a = std::numbers::pi * j / angle_steps;  // e^{-2ia} has period pi
        const double v = worst_ratio(a);
        if (v < best) {
            best = v;
            best_a = a;
        }
    }
    const double cell = std::numbers::pi / angle_steps;
    const double a = golden_min(worst_ratio, best_a - cell, best_a + cell, 80);
    if (worst_ratio(a) < best) {
        best = worst_ratio(a);
        best_a = a;
    }
    return {best_a, best, best <= 1.0 + tol};
}

// ---- Clunie-Sheil-Small direction search ----

double css2_residual(const HarmonicMap& f, double alpha, double beta,
                     std::span<const Complex> grid) {
    const Complex e2a = std::polar(1.0, -2.0 * alpha);
    const Complex e2b = std::polar(1.0, -2.0 * beta);
    const Complex eab = std::polar(1.0, alpha + beta);
    double mn = std::numeric_limits<double>::infinity();
    for (const Complex& z : grid) {
        const Complex v = eab * (f.h.deriv(z) + e2a * f.g.deriv(z)) * (1.0 - e2b * z * z);
        mn = std::min(mn, v.real());
    }
    return mn;
}

DirectionPair css2_search(const HarmonicMap& f, std::span<const Complex> grid, int angle_steps) {
    const std::size_t n = grid.size();
    std::vector<Complex> hp(n), gp(n), z2(n);
    for (std::size_t i = 0; i < n; ++i) {
        hp[i] = f.h.deriv(grid[i]);
        gp[i] = f.g.deriv(grid[i]);
        z2[i] = grid[i] * grid[i];
    }
    auto residual = [&](double a, double b) {
        const Complex e2a = std::polar(1.0, -2.0 * a);
        const Complex e2b = std::polar(1.0, -2.0 * b);
        const Complex eab = std::polar(1.0, a + b);
        double mn = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            const Complex v = eab * (hp[i] + e2a * gp[i]) * (1.0 - e2b * z2[i]);
            mn = std::min(mn, v.real());
        }
        return mn;
    };

    double best_a = 0, best_b = 0, best = -std::numeric_limits<double>::infinity();
    for (int ia = 0; ia < angle_steps; ++ia) {
        for (int ib = 0; ib < angle_steps; ++ib) {
            const double a = kTwoPi * ia / angle_steps;
            const double b = kTwoPi * ib / angle_steps;
            const double res = residual(a, b);
            if (res > best) {
                best = res;
                best_a = a;
                best_b = b;
            }
        }
    }
    // coordinate-wise golden-section refinement around the best grid cell
    const double cell = kTwoPi / angle_steps;
    for (int round = 0; round < 3; ++round) {
        best_a = golden_min([&](double a) { return -residual(a, best_b); },
                            best_a - cell, best_a + cell, 48);
        best_b = golden_min([&](double b) { return -residual(best_a, b); },
                            best_b - cell, best_b + cell, 48);
    }
    return {best_a, best_b, residual(best_a, best_b)};
}

DirectionPair css2_search_beta(const HarmonicMap& f, std::span<const Complex> grid, double alpha,
                               int angle_steps) {
    auto residual = [&](double b) { return css2_residual(f, alpha, b, grid); };
    double best_b = 0, best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < angle_steps; ++j) {
        const double b = kTwoPi * j / angle_steps;
        const double v = residual(b);
        if (v > best) {
            best = v;
            best_b = b;
        }
    }
    const double cell = kTwoPi / angle_steps;
    const double b = golden_min([&](double x) { return -residual(x); }, best_b - cell,
                                best_b + cell, 64);
    if (residual(b) > best) {
        best = residual(b);
        best_b = b;
    }
    return {alpha, best_b, best};
}

DirectionSumReport direction_with_sum(const HarmonicMap& f, std::span<const Complex> grid,
                                      int angle_steps, double res_tol, double sum_tol) {
    DirectionSumReport out;
    out.direction = css2_search(f, grid, angle_steps);
    out.sum_pass = check_sum_bound(f, out.direction.alpha, grid, sum_tol).pass;
    out.pass = out.direction.min_residual >= -res_tol && out.sum_pass;
    if (out.pass) return out;

    const SumBoundResult sum = sum_bound_search(f, grid, 720, sum_tol);
    const DirectionPair dir = css2_search_beta(f, grid, sum.alpha, angle_steps);
    if (sum.pass && dir.min_residual >= -res_tol) {
        out.direction = dir;
        out.sum_pass = true;
        out.pass = true;
    }
    return out;
}

// ---- Herglotz machinery ----

AnalyticMap herglotz_delta(const AnalyticMap& q, double alpha) {
    if (std::cos(alpha) <= 0.0) {
        throw DegenerateAlpha("herglotz_delta: cos(alpha) must be positive");
    }
    if (std::abs(q.value(Complex{}) - 1.0) > 1e-8) {
        throw NotHerglotz("herglotz_delta: q(0) must equal 1");
    }
    const Complex eia = std::polar(1.0, alpha);
    const Complex e2a = std::polar(1.0, -2.0 * alpha);
    const auto grid = default_grid({0.3, 0.6, 0.9}, 32);
    for (const Complex& z : grid) {
        if ((eia * q.value(z)).real() < -1e-9) {
            throw NotHerglotz("herglotz_delta: Re(e^{i alpha} q) < 0 on the grid");
        }
    }
    auto value = [qv = q.value, e2a](Complex z) {
        const Complex qz = qv(z);
        return (qz - 1.0) / (qz + e2a);
    };
    // validation: Schwarz bound and reconstruction
    for (const Complex& z : grid) {
        const Complex d = value(z);
        if (std::abs(d) > std::abs(z) + 1e-9) {
            throw NotHerglotz("herglotz_delta: Schwarz bound |delta| <= |z| fails");
        }
        const Complex qz = q.value(z);
        const Complex rec = (1.0 + e2a * d) / (1.0 - d);
        if (std::abs(rec - qz) > 1e-9 * (1.0 + std::abs(qz))) {
            throw Error("herglotz_delta: reconstruction identity fails");
        }
    }
    TruncatedSeries num = sub(q.series, TruncatedSeries::constant(1.0, q.series.order()));
    TruncatedSeries den = add(q.series, TruncatedSeries::constant(e2a, q.series.order()));
    return AnalyticMap{"delta(" + q.label + ")", value, numerical_derivative(value),
                       div(num, den)};
}

// ---- coefficient statements ----

BoundReport coefficient_check(const HarmonicMap& f, int n_max, double tol) {
    BoundReport rep;
    rep.tolerance = tol;
    rep.pass = true;
    for (int n = 2; n <= n_max; ++n) {
        rep.add(Complex(n, 0), std::abs(f.h.series.coeff(n)), 0.0, 0.5 * (n + 1));
        rep.add(Complex(n, 1), std::abs(f.g.series.coeff(n)), 0.0, 0.5 * (n - 1));
    }
    return rep;
}

BieberbachReport bieberbach_check(const AnalyticMap& phi) {
    BieberbachReport rep;
    rep.second_deriv_mod = 2.0 * std::abs(phi.series.coeff(2));
    rep.pass = rep.second_deriv_mod <= 4.0 + 1e-9;
    rep.equality = std::abs(rep.second_deriv_mod - 4.0) <= 1e-6;
    return rep;
}

// ---- convexity of sampled curves ----

CurveCheck convex_curve_check(const HarmonicMap& f, double r, int samples, double curve_tol) {
    if (!(r > 0.0 && r < 1.0)) throw RadiusOutOfRange("convex_curve_check: r must be in (0,1)");
    return polyline_convexity(sample_circle(f, r, samples), curve_tol);
}

CurveCheck convex_curve_check(const AnalyticMap& phi, double r, int samples, double curve_tol) {
    if (!(r > 0.0 && r < 1.0)) throw RadiusOutOfRange("convex_curve_check: r must be in (0,1)");
    return polyline_convexity(sample_circle(phi, r, samples), curve_tol);
}

namespace {

bool direction_convex(std::vector<Complex> w, double theta) {
    const Complex rot = std::polar(1.0, -theta);
    for (auto& p : w) p *= rot;
    return imaginary_part_sign_runs(w) == 2;
}

}  // namespace

bool direction_convexity_check(const HarmonicMap& f, double theta, double r, int samples) {
    if (!(r > 0.0 && r < 1.0)) throw RadiusOutOfRange("direction_convexity_check: bad radius");
    return direction_convex(sample_circle(f, r, samples), theta);
}

bool direction_convexity_check(const AnalyticMap& phi, double theta, double r, int samples) {
    if (!(r > 0.0 && r < 1.0)) throw RadiusOutOfRange("direction_convexity_check: bad radius");
    return direction_convex(sample_circle(phi, r, samples), theta);
}

// ---- covering radii and growth order ----

namespace {

// Minimize fn(t) over [0, 2pi): dense scan plus local golden-section.
double circle_min(const std::function<double(double)>& fn, int coarse = 16384) {
    double best_t = 0, best = std::numeric_limits<double>::infinity();
    for (int m = 0; m < coarse; ++m) {
        const double t = kTwoPi * m / coarse;
        const double v = fn(t);
        if (v < best) {
            best = v;
            best_t = t;
        }
    }
    const double h = kTwoPi / coarse;
    const double t = golden_min(fn, best_t - h, best_t + h, 64);
    return std::min(best, fn(t));
}

}  // namespace

CoveringEstimate covering_radius(const AnalyticMap& h, std::span<const double> r_sequence) {
    CoveringEstimate out;
    for (double r : r_sequence) {
        auto fn = [&](double t) {
            return std::abs(h.value(Complex(r * std::cos(t), r * std::sin(t))));
        };
        out.per_radius.emplace_back(r, circle_min(fn));
    }
    if (!out.per_radius.empty()) out.estimate = out.per_radius.back().second;
    return out;
}

std::vector<std::pair<double, double>> growth_order_L(std::span<const double> r_sequence) {
    // L = Re l + i Im k in closed form
    auto Lmod = [](double r, double t) {
        const Complex z(r * std::cos(t), r * std::sin(t));
        const Complex ell = z / (1.0 - z);
        const Complex k = z / ((1.0 - z) * (1.0 - z));
        return std::hypot(ell.real(), k.imag());
    };
    std::vector<std::pair<double, double>> out;
    for (double r : r_sequence) {
        auto neg = [&](double t) { return -Lmod(r, t); };
        const double mx = -circle_min(neg);
        out.emplace_back(r, (1 - r) * (1 - r) * mx);
    }
    return out;
}

// ---- refined distortion ----

BoundReport refined_distortion_check(const HarmonicMap& f, std::span<const Complex> grid,
                                     double tol) {
    BoundReport rep;
    rep.tolerance = tol;
    rep.pass = true;
    const Envelopes env;
    for (const Complex& a : grid) {
        const double r = std::abs(a);
        const Complex hpa = f.h.deriv(a);
        const double womega = std::abs(f.g.deriv(a) / hpa);
        const double refined = 1.0 / ((1 + r) * (1 + r) * (1 + womega));
        rep.add(a, std::abs(hpa), refined, env.h_distortion(r).upper);
    }
    return rep;
}

// ---- rigidity ----

RigidityFinding rigidity_probe(const HarmonicMap& f, int angle_steps, double rigidity_tol) {
    constexpr int kNCoeff = 12;
    auto shear_distance = [&](double mu) {
        const Complex e2m = std::polar(1.0, -2.0 * mu);
        const Complex lambda = 0.5 * (f.h.series.coeff(2) - e2m * f.g.series.coeff(2));
        if (std::abs(lambda) > 1.5 || std::abs(lambda) < 0.5) {
            return std::numeric_limits<double>::infinity();
        }
        double d = std::abs(f.h.series.coeff(1) - e2m * f.g.series.coeff(1) - 1.0);
        Complex lp = lambda;  // lambda^{n-1}
        for (int n = 2; n <= kNCoeff; ++n) {
            const Complex sn = f.h.series.coeff(n) - e2m * f.g.series.coeff(n);
            d = std::max(d, std::abs(sn - static_cast<double>(n) * lp));
            lp *= lambda;
        }
        return d;
    };

    double best_mu = 0, best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < angle_steps; ++j) {
        const double mu = std::numbers::pi * j / angle_steps;  // e^{-2i mu} has period pi
        const double d = shear_distance(mu);
        if (d < best) {
            best = d;
            best_mu = mu;
        }
    }
    const double h = std::numbers::pi / angle_steps;
    if (std::isfinite(best)) {
        const double mu = golden_min(shear_distance, best_mu - h, best_mu + h, 80);
        if (shear_distance(mu) < best) {
            best = shear_distance(mu);
            best_mu = mu;
        }
    }

    RigidityFinding out;
    out.mu = best_mu;
    out.shear_distance = best;
    out.shear_detected = best < rigidity_tol;
    if (!out.shear_detected) return out;

    const Complex e2m = std::polar(1.0, -2.0 * best_mu);
    out.koebe_rotation = 0.5 * (f.h.series.coeff(2) - e2m * f.g.series.coeff(2));

    // candidate rotation parameter of L from the second analytic coefficient
    const Complex nu = f.h.series.coeff(2) / 1.5;
    if (std::abs(std::abs(nu) - 1.0) < 1e-6) {
        const Complex nuc = nu / std::abs(nu);
        const HarmonicMap L = harmonic_L();
        double worst = 0;
        for (int j = 0; j < 24; ++j) {
            const double r = 0.15 + 0.65 * (j % 6) / 5.0;
            const double t = kTwoPi * j / 24;
            const Complex z(r * std::cos(t), r * std::sin(t));
            const Complex ref = std::conj(nuc) * evaluate_harmonic(L, nuc * z);
            worst = std::max(worst, std::abs(evaluate_harmonic(f, z) - ref));
        }
        out.l_rotation = nuc;
        out.max_match_error = worst;
        out.matches_L = worst <= 1e-6;
    }
    out.violation = out.shear_detected && !out.matches_L;
    return out;
}

// ---- sharpness ----

std::vector<SharpnessRow> sharpness_table(std::span<const double> radii) {
    const Envelopes env;
    auto H = [](Complex z) { return (2.0 * z - z * z) / (2.0 * (1.0 - z) * (1.0 - z)); };
    auto Hp = [](Complex z) { return 1.0 / std::pow(1.0 - z, 3); };
    std::vector<SharpnessRow> rows;
    for (double r : radii) {
        const EnvelopePair g = env.h_growth(r);
        const EnvelopePair d = env.h_distortion(r);
        auto push = [&rows, r](const char* q, double v, double e) {
            const double gap = std::abs(v - e) / std::max(e, 1e-300);
            rows.push_back({r, q, v, e, gap});
        };
        push("|H(r)| vs upper growth", std::abs(H(Complex(r, 0))), g.upper);
        push("|H(-r)| vs lower growth", std::abs(H(Complex(-r, 0))), g.lower);
        push("|H'(r)| vs upper distortion", std::abs(Hp(Complex(r, 0))), d.upper);
        push("|H'(-r)| vs lower distortion", std::abs(Hp(Complex(-r, 0))), d.lower);
    }
    return rows;
}

}  // namespace chm
