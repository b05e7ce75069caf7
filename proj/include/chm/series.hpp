#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "chm/errors.hpp"

namespace chm {

using Complex = std::complex<double>;
using ComplexHP = std::complex<long double>;

using PointEvaluator = std::function<Complex(Complex)>;
using PointEvaluatorHP = std::function<ComplexHP(ComplexHP)>;

/// Kernel configuration. Truncated series are trusted only on |z| <= kSeriesRadius;
/// anything closer to the boundary must go through closed-form evaluators.
inline constexpr double kSeriesRadius = 0.95;
inline constexpr double kDivTol = 1e-12;
inline constexpr double kCoeffTol = 1e-8;
inline constexpr int kOversample = 4;
inline constexpr int kDefaultOrder = 64;

/// Complex power series truncated at a fixed order. Immutable after construction;
/// all stored coefficients are required to be finite.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries zero(int order);
    static TruncatedSeries constant(Complex c0, int order = kDefaultOrder);
    /// The series of z itself.
    static TruncatedSeries identity(int order = kDefaultOrder);
    /// c * z^m.
    static TruncatedSeries monomial(Complex c, int m, int order = kDefaultOrder);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    /// Coefficient of z^n; zero past the truncation order.
    Complex coeff(int n) const;

private:
    std::vector<Complex> coeffs_;
};

/// Coefficient-wise sum; the shorter operand is padded with zeros.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, Complex s);

/// Cauchy product truncated at max(order(a), order(b)).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Power-series quotient c with mul(c, b) = a up to order. Requires
/// |b_0| > div_tol; throws NearZeroConstantTerm otherwise.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b,
                    double div_tol = kDivTol);

/// Termwise derivative; order drops by one.
TruncatedSeries differentiate(const TruncatedSeries& a);

/// Antiderivative vanishing at 0; order grows by one.
TruncatedSeries integrate_from_zero(const TruncatedSeries& a);

/// Taylor coefficients of outer(inner(z)) truncated at order(outer). The inner
/// map must fix the origin (|inner_0| <= tol); throws NonzeroInnerConstant
/// otherwise. Compositions with maps not fixing 0 go through pointwise
/// evaluation plus extract_coeffs instead.
TruncatedSeries compose_inner_zero(const TruncatedSeries& outer, const TruncatedSeries& inner,
                                   double tol = 1e-12);

/// Horner evaluation. Only defined on |z| <= r_max; throws OutsideEvaluationDisk.
Complex evaluate(const TruncatedSeries& a, Complex z, double r_max = kSeriesRadius);

/// Coefficient recovery by equispaced sampling on the circle |z| = rho
/// (discretized Cauchy integral). Aliasing is estimated by doubling the sample
/// count; throws AliasingTooLarge if the estimate exceeds coeff_tol.
TruncatedSeries extract_coeffs(const PointEvaluator& eval, int order, double rho,
                               int oversample = kOversample, double coeff_tol = kCoeffTol);

/// Extended-precision variant for evaluators available in long double. Needed
/// when high-index coefficients are recovered at small rho, where the 1/rho^n
/// amplification eats double-precision headroom.
TruncatedSeries extract_coeffs(const PointEvaluatorHP& eval, int order, double rho,
                               int oversample = kOversample, double coeff_tol = kCoeffTol);

}  // namespace chm
