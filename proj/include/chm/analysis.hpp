#pragma once

#include <span>
#include <utility>
#include <vector>

#include "chm/mappings.hpp"

namespace chm {

struct EnvelopePair {
    double lower = 0.0;
    double upper = 0.0;
};

/// Closed-form sharp envelopes as functions of r = |z|. The scale field is a
/// falsifiability hook: values != 1 tighten the envelopes (upper * scale,
/// lower / scale) so that true statements are driven to failure.
struct Envelopes {
    double scale = 1.0;

    EnvelopePair k_growth(double r) const;      ///< r/(1+r) .. r/(1-r)
    EnvelopePair k_distortion(double r) const;  ///< 1/(1+r)^2 .. 1/(1-r)^2
    EnvelopePair s_growth(double r) const;      ///< r/(1+r)^2 .. r/(1-r)^2
    EnvelopePair s_distortion(double r) const;  ///< (1-r)/(1+r)^3 .. (1+r)/(1-r)^3
    EnvelopePair p_growth(double r) const;      ///< (1-r)/(1+r) .. (1+r)/(1-r)
    EnvelopePair f_growth(double r) const;      ///< r/(1+r)^2 .. r/(1-r)^2 (lower known non-sharp)
    EnvelopePair h_growth(double r) const;      ///< (2r+r^2)/(2(1+r)^2) .. (2r-r^2)/(2(1-r)^2)
    EnvelopePair h_distortion(double r) const;  ///< 1/(1+r)^3 .. 1/(1-r)^3
};

struct BoundSample {
    Complex z;
    double measured = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double lower_margin = 0.0;  ///< measured - lower
    double upper_margin = 0.0;  ///< upper - measured
    bool pass = false;
};

struct BoundReport {
    std::vector<BoundSample> samples;
    double tolerance = 0.0;
    bool pass = false;

    void add(Complex z, double measured, double lower, double upper);
    double worst_margin() const;
};

/// Growth/distortion of the analytic part h against the sharp K_H^0 envelopes
/// at z = r e^{it} over the given radii and angles. Requires a certified
/// membership witness.
BoundReport check_h_bounds(const HarmonicMap& f, const ClassMembership& cert,
                           std::span<const double> radii, std::span<const double> angles,
                           const Envelopes& env = {}, double tol = 1e-8);

/// |h'(z) + e^{-2i alpha} g'(z)| <= 1/(1-|z|)^2 on the grid.
BoundReport check_sum_bound(const HarmonicMap& f, double alpha, std::span<const Complex> grid,
                            double tol = 1e-8);

struct SumBoundResult {
    double alpha = 0.0;
    double max_ratio = 0.0;  ///< max over the grid of |h'+e^{-2i alpha}g'| (1-|z|)^2
    bool pass = false;
};

/// The sum bound is an existence statement ("for some alpha"); this searches
/// for the witnessing alpha by minimizing the worst ratio against the bound.
/// The admissible alpha can be an isolated point, so the direction-search pair
/// is not reused here.
SumBoundResult sum_bound_search(const HarmonicMap& f, std::span<const Complex> grid,
                                int angle_steps = 720, double tol = 1e-8);

struct DirectionPair {
    double alpha = 0.0;
    double beta = 0.0;
    double min_residual = 0.0;
};

/// Residual of the Clunie-Sheil-Small direction inequality at a single (alpha,
/// beta): min over the grid of Re(e^{i(a+b)} (h'+e^{-2ia}g')(1-e^{-2ib}z^2)).
double css2_residual(const HarmonicMap& f, double alpha, double beta,
                     std::span<const Complex> grid);

/// Exhaustive grid search over (alpha, beta) with coordinate-wise golden-section
/// refinement, maximizing the minimal residual. The theorem guarantees an
/// admissible pair for true members; none found is a reportable finding, not an
/// exception (inspect min_residual).
DirectionPair css2_search(const HarmonicMap& f, std::span<const Complex> grid,
                          int angle_steps = 360);

/// As css2_search with alpha held fixed; used to pair the sum-bound witnessing
/// alpha (which can be an isolated point on the admissible ridge) with a beta.
DirectionPair css2_search_beta(const HarmonicMap& f, std::span<const Complex> grid, double alpha,
                               int angle_steps = 360);

struct DirectionSumReport {
    DirectionPair direction;
    bool sum_pass = false;
    bool pass = false;
};

/// Finds one (alpha, beta) witnessing both statements of the representation
/// theorem: direction residual >= -res_tol and the sum bound at the same
/// alpha. Tries the free direction search first (the sum bound may hold for
/// every alpha, e.g. when g = 0) and falls back to the sum-bound alpha, whose
/// admissible set can be an isolated point on the direction-search ridge.
DirectionSumReport direction_with_sum(const HarmonicMap& f, std::span<const Complex> grid,
                                      int angle_steps = 360, double res_tol = 1e-6,
                                      double sum_tol = 1e-8);

/// Herglotz-type representation: for q with q(0) = 1 and Re(e^{i alpha} q) >= 0,
/// returns delta = (q - 1)/(q + e^{-2i alpha}) with delta(0) = 0 and
/// |delta| <= |z| (Schwarz), validated on a grid together with the
/// reconstruction q = (1 + e^{-2i alpha} delta)/(1 - delta).
AnalyticMap herglotz_delta(const AnalyticMap& q, double alpha);

/// Per-coefficient margins against |a_n| <= (n+1)/2, |b_n| <= (n-1)/2.
/// Sample n of the report encodes coefficient index n+2.
BoundReport coefficient_check(const HarmonicMap& f, int n_max = 12, double tol = 1e-9);

struct BieberbachReport {
    double second_deriv_mod = 0.0;  ///< |phi''(0)|
    bool pass = false;
    bool equality = false;  ///< within 1e-6 of the extremal value 4
};

BieberbachReport bieberbach_check(const AnalyticMap& phi);

/// Discrete convexity of the image of |z| = r. Note: for harmonic maps this is
/// a statement about the level curve only; convex harmonic images are not
/// hereditary on sub-disks.
CurveCheck convex_curve_check(const HarmonicMap& f, double r, int samples = 1024,
                              double curve_tol = 1e-9);
CurveCheck convex_curve_check(const AnalyticMap& phi, double r, int samples = 1024,
                              double curve_tol = 1e-9);

/// Convexity of the level curve in direction theta: after rotating by
/// e^{-i theta}, the imaginary part along the curve must be unimodal (exactly
/// two sign-change runs of its discrete derivative).
bool direction_convexity_check(const HarmonicMap& f, double theta, double r, int samples = 1024);
bool direction_convexity_check(const AnalyticMap& phi, double theta, double r, int samples = 1024);

struct CoveringEstimate {
    std::vector<std::pair<double, double>> per_radius;  ///< (r, min_t |h(r e^{it})|)
    double estimate = 0.0;                              ///< value at the largest radius
};

/// min_t |h(r e^{it})| along an increasing radius sequence (dense scan plus
/// golden-section refinement).
CoveringEstimate covering_radius(const AnalyticMap& h, std::span<const double> r_sequence);

/// (r, (1-r)^2 max_t |L(r e^{it})|) for the half-plane harmonic mapping.
std::vector<std::pair<double, double>> growth_order_L(std::span<const double> r_sequence);

/// Refined lower distortion bound 1/((1+|a|)^2 (1+|omega(a)|)) <= |h'(a)|,
/// strictly stronger than the 1/(1+|a|)^3 envelope (checked as the upper
/// column of the report: measured |h'| must exceed the refined bound).
BoundReport refined_distortion_check(const HarmonicMap& f, std::span<const Complex> grid,
                                     double tol = 1e-8);

struct RigidityFinding {
    bool shear_detected = false;   ///< some h - e^{-2i mu} g is a Koebe rotation
    double mu = 0.0;               ///< detected shear angle
    Complex koebe_rotation{};      ///< lambda of the detected Koebe rotation
    double shear_distance = 0.0;   ///< coefficient distance at the detected mu
    bool matches_L = false;        ///< f equals a rotation of L pointwise
    Complex l_rotation{};          ///< rotation parameter of the matched L
    double max_match_error = 0.0;
    bool violation = false;        ///< Koebe shear found but no L rotation matches
};

/// Scans mu for a Koebe-rotation shear h - e^{-2i mu} g and, when found,
/// verifies that f is a rotation of L. A violation would numerically falsify
/// the rigidity proposition.
RigidityFinding rigidity_probe(const HarmonicMap& f, int angle_steps = 64,
                               double rigidity_tol = 1e-6);

struct SharpnessRow {
    double r = 0.0;
    std::string quantity;       ///< which extremal value / envelope is compared
    double value_at_extremal = 0.0;
    double envelope_value = 0.0;
    double relative_gap = 0.0;
};

/// |H(+-r)| and |H'(+-r)| against all four sharp envelopes; gaps vanish.
std::vector<SharpnessRow> sharpness_table(std::span<const double> radii);

}  // namespace chm
