#include "chm/geometry.hpp"

#include <cmath>

#include "chm/errors.hpp"

namespace chm {

CurveCheck polyline_convexity(std::span<const Complex> w, double curve_tol) {
    const std::size_t n = w.size();
    if (n < 3) throw DegenerateCurve("polyline_convexity: need at least 3 samples");
    double min_cross = 1.0, max_cross = -1.0;
    for (std::size_t m = 0; m < n; ++m) {
        const Complex e1 = w[(m + 1) % n] - w[m];
        const Complex e2 = w[(m + 2) % n] - w[(m + 1) % n];
        const double l1 = std::abs(e1), l2 = std::abs(e2);
        if (l1 == 0.0 || l2 == 0.0) {
            throw DegenerateCurve("polyline_convexity: coincident consecutive samples");
        }
        const double cross = (e1.real() * e2.imag() - e1.imag() * e2.real()) / (l1 * l2);
        min_cross = std::min(min_cross, cross);
        max_cross = std::max(max_cross, cross);
    }
    // One sign overall; orientation may be either way.
    const bool convex = (min_cross >= -curve_tol) || (max_cross <= curve_tol);
    const double signed_min = (max_cross <= curve_tol) ? -max_cross : min_cross;
    return {convex, signed_min};
}

int imaginary_part_sign_runs(std::span<const Complex> w) {
    const std::size_t n = w.size();
    std::vector<int> signs;
    signs.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double d = w[(m + 1) % n].imag() - w[m].imag();
        if (d > 0) signs.push_back(1);
        else if (d < 0) signs.push_back(-1);
        // exact zeros carry no direction information
    }
    if (signs.empty()) return 0;
    int runs = 0;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] != signs[(i + 1) % signs.size()]) ++runs;
    }
    return runs;
}

bool point_inside_polygon(std::span<const Complex> poly, Complex p) {
    const std::size_t n = poly.size();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const double yi = poly[i].imag(), yj = poly[j].imag();
        if ((yi > p.imag()) != (yj > p.imag())) {
            const double x = poly[j].real() +
                             (p.imag() - yj) / (yi - yj) * (poly[i].real() - poly[j].real());
            if (p.real() < x) inside = !inside;
        }
    }
    return inside;
}

}  // namespace chm
