#pragma once

#include <cmath>
#include <functional>

#include "chm/series.hpp"

namespace chm {

/// Adaptive Gauss-Legendre quadrature of a complex integrand on [a, b].
/// Splits a panel whenever the two-half refinement moves the estimate by more
/// than tol relative to the local panel scale.
Complex integrate_adaptive(const std::function<Complex(double)>& f, double a, double b,
                           double tol = 1e-13, int max_depth = 30);

/// Radial primitive: int_0^1 fp(t z) z dt, i.e. the value at z of the
/// antiderivative of fp vanishing at 0.
Complex integrate_radial(const std::function<Complex(Complex)>& fp, Complex z,
                         double tol = 1e-13);

}  // namespace chm
