#pragma once

#include <span>
#include <vector>

#include "chm/series.hpp"

namespace chm {

struct CurveCheck {
    bool convex = false;
    /// Minimum cross product of consecutive edges, normalized by edge lengths.
    double min_cross = 0.0;
};

/// Discrete convexity of a closed sampled curve: all normalized cross products
/// of consecutive edges share one sign (within -curve_tol). Throws
/// DegenerateCurve if consecutive samples coincide.
CurveCheck polyline_convexity(std::span<const Complex> w, double curve_tol = 1e-9);

/// Number of sign-change runs of the discrete derivative of Im(w) along the
/// closed curve. A curve convex in the horizontal direction has exactly 2.
int imaginary_part_sign_runs(std::span<const Complex> w);

/// Even-odd point-in-polygon test (ray casting toward +x). For the image of a
/// circle under a univalent map this equals the winding-number test.
bool point_inside_polygon(std::span<const Complex> poly, Complex p);

}  // namespace chm
