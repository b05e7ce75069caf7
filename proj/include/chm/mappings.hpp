#pragma once

#include <string>
#include <vector>

#include "chm/geometry.hpp"
#include "chm/series.hpp"

namespace chm {

/// Analytic function on the unit disk: closed-form point evaluator plus a
/// cached truncated series. The evaluator is the source of truth near the
/// boundary; the series serves coefficient statements and |z| <= kSeriesRadius.
struct AnalyticMap {
    std::string label;
    PointEvaluator value;
    PointEvaluator deriv;
    TruncatedSeries series;

    Complex operator()(Complex z) const { return value(z); }
};

/// Validating constructor: checks evaluator/series agreement at 20 pseudo-random
/// points with |z| <= 0.5.
AnalyticMap make_analytic(std::string label, PointEvaluator value, PointEvaluator deriv,
                          TruncatedSeries series);

/// As make_analytic, with the series recovered from the evaluator by contour
/// sampling at |z| = rho. The default rho balances the 1/rho^n noise
/// amplification of high-index coefficients against truncation aliasing.
AnalyticMap make_analytic_sampled(std::string label, PointEvaluator value, PointEvaluator deriv,
                                  int order = kDefaultOrder, double rho = 0.8);

/// Central-difference derivative with one Richardson step; for analytic maps
/// whose derivative has no convenient closed form.
PointEvaluator numerical_derivative(PointEvaluator value, double step = 1e-4);

/// Harmonic mapping f = h + conj(g), both parts analytic.
struct HarmonicMap {
    std::string label;
    AnalyticMap h;
    AnalyticMap g;
};

Complex evaluate_harmonic(const HarmonicMap& f, Complex z);

/// f sampled on |z| = r at M equispaced angles (t = 2*pi*m/M).
std::vector<Complex> sample_circle(const HarmonicMap& f, double r, int M);
std::vector<Complex> sample_circle(const AnalyticMap& phi, double r, int M);

// ---- canonical catalog -------------------------------------------------------

/// Koebe function k(z) = z / (1-z)^2.
AnalyticMap koebe(int order = kDefaultOrder);

/// Half-plane map l(z) = z / (1-z), onto Re w > -1/2.
AnalyticMap halfplane_l(int order = kDefaultOrder);

/// Strip map s(z) = log((1+z)/(1-z)) / 2 (principal branch; the argument has
/// positive real part on the disk).
AnalyticMap strip_map(int order = kDefaultOrder);

AnalyticMap identity_map(int order = kDefaultOrder);
AnalyticMap zero_map(int order = kDefaultOrder);

/// Half-plane harmonic mapping L = H + conj(G), H = (l+k)/2, G = (l-k)/2.
HarmonicMap harmonic_L(int order = kDefaultOrder);

/// Analytic map viewed as a harmonic one (g = 0).
HarmonicMap analytic_as_harmonic(const AnalyticMap& phi);

// ---- dilatations for the sampler catalog ------------------------------------

/// omega(z) = c z^m, |c| <= 1, m >= 1.
AnalyticMap monomial_dilatation(Complex c, int m, int order = kDefaultOrder);

/// omega(z) = z (c + z) / (1 + conj(c) z), |c| < 1.
AnalyticMap blaschke_dilatation(Complex c, int order = kDefaultOrder);

// ---- transformations ---------------------------------------------------------

/// phi_lambda(z) = conj(lambda) phi(lambda z), |lambda| = 1.
AnalyticMap rotate_analytic(const AnalyticMap& phi, Complex lambda);

/// f_lambda(z) = conj(lambda) f(lambda z); h and g rotate as
/// h_l(z) = conj(lambda) h(lambda z), g_l(z) = lambda g(lambda z).
HarmonicMap rotate_harmonic(const HarmonicMap& f, Complex lambda);

/// Dilatation omega = g'/h'. Throws VanishingDerivative if h' has a zero on
/// the validation grid.
AnalyticMap dilatation(const HarmonicMap& f);

/// Shear construction: h' = phi' / (1 - e^{2i theta} omega), g' = omega h',
/// h(0) = g(0) = 0. Satisfies h - e^{2i theta} g = phi and g' = omega h'
/// identically. Membership of the result in the convex class is a property of
/// phi and omega and is certified separately via membership().
HarmonicMap shear(const AnalyticMap& phi, const AnalyticMap& omega, double theta);

// ---- class membership --------------------------------------------------------

struct MembershipConfig {
    double norm_tol = 1e-10;
    // Jacobian positivity grid
    std::vector<double> jacobian_radii = {0.2, 0.5, 0.8, 0.95};
    int jacobian_angles = 24;
    // image-convexity probe
    double probe_radius = 0.999;
    int curve_samples = 4096;
    std::vector<double> interior_radii = {0.3, 0.6, 0.9, 0.95};
    int interior_angles = 12;
    double shrink = 0.98;
};

/// Numerically certified class membership. Convexity of f(D) is probed by
/// midpoint convexity: for pairs of interior image points, the (slightly
/// contracted) midpoint must lie inside the image curve at probe_radius.
/// Fixed-radius curve convexity is NOT used here: convex harmonic images are
/// not hereditary on sub-disks (even L has slightly non-convex level curves),
/// so the probe targets the limit image instead.
struct ClassMembership {
    bool normalization_ok = false;
    bool orientation_ok = false;
    bool convex_image = false;
    bool g_prime0_zero = false;
    bool in_KH = false;
    bool in_K0H = false;
    // witnesses
    double max_normalization_residual = 0.0;
    double min_jacobian = 0.0;
    int bad_midpoints = 0;
    int total_midpoints = 0;
    double probe_radius = 0.0;
    int curve_samples = 0;
};

ClassMembership membership(const HarmonicMap& f, const MembershipConfig& cfg = {});

}  // namespace chm
