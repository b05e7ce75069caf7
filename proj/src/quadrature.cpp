#include "chm/quadrature.hpp"

#include <array>

namespace chm {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 15> kNodes = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
    -0.7244177313601700, -0.5709721726085388, -0.3941513470775634,
    -0.2011940939974345, 0.0,                 0.2011940939974345,
    0.3941513470775634,  0.5709721726085388,  0.7244177313601700,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
constexpr std::array<double, 15> kWeights = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
    0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
    0.1984314853271116, 0.2025782419255613, 0.1984314853271116,
    0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

Complex panel(const std::function<Complex(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Complex s{};
    for (int i = 0; i < 15; ++i) s += kWeights[i] * f(mid + half * kNodes[i]);
    return half * s;
}

Complex recurse(const std::function<Complex(double)>& f, double a, double b, Complex whole,
                double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const Complex left = panel(f, a, mid);
    const Complex right = panel(f, mid, b);
    const Complex refined = left + right;
    // error test is relative to the local panel scale; an absolute 1e-13 target
    // is unreachable in double once the integrand grows large near the boundary
    const double scale = std::max(1.0, std::abs(refined));
    if (depth <= 0 || std::abs(refined - whole) <= tol * scale) return refined;
    return recurse(f, a, mid, left, tol, depth - 1) + recurse(f, mid, b, right, tol, depth - 1);
}

}  // namespace

Complex integrate_adaptive(const std::function<Complex(double)>& f, double a, double b,
                           double tol, int max_depth) {
    return recurse(f, a, b, panel(f, a, b), tol, max_depth);
}

Complex integrate_radial(const std::function<Complex(Complex)>& fp, Complex z, double tol) {
    if (z == Complex{}) return {};
    auto integrand = [&fp, z](double t) { return fp(t * z) * z; };
    return integrate_adaptive(integrand, 0.0, 1.0, tol);
}

}  // namespace chm
