#include "chm/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace chm {

namespace {

void require_finite(const std::vector<Complex>& coeffs) {
    for (const auto& c : coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw Error("TruncatedSeries: non-finite coefficient");
        }
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("TruncatedSeries: empty coefficient vector");
    require_finite(coeffs_);
}

TruncatedSeries TruncatedSeries::zero(int order) {
    return TruncatedSeries(std::vector<Complex>(order + 1, Complex{}));
}

TruncatedSeries TruncatedSeries::constant(Complex c0, int order) {
    std::vector<Complex> c(order + 1, Complex{});
    c[0] = c0;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::identity(int order) { return monomial(1.0, 1, order); }

TruncatedSeries TruncatedSeries::monomial(Complex c, int m, int order) {
    if (m < 0 || m > order) throw Error("TruncatedSeries::monomial: degree out of range");
    std::vector<Complex> v(order + 1, Complex{});
    v[m] = c;
    return TruncatedSeries(std::move(v));
}

Complex TruncatedSeries::coeff(int n) const {
    if (n < 0) throw Error("TruncatedSeries::coeff: negative index");
    if (n > order()) return {};
    return coeffs_[n];
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::max(a.order(), b.order());
    std::vector<Complex> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = a.coeff(i) + b.coeff(i);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    return add(a, scale(b, -1.0));
}

TruncatedSeries scale(const TruncatedSeries& a, Complex s) {
    std::vector<Complex> c(a.coeffs());
    for (auto& x : c) x *= s;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::max(a.order(), b.order());
    std::vector<Complex> c(n + 1, Complex{});
    const int na = std::min(a.order(), n);
    for (int i = 0; i <= na; ++i) {
        const Complex ai = a.coeff(i);
        if (ai == Complex{}) continue;
        const int nb = std::min(b.order(), n - i);
        for (int j = 0; j <= nb; ++j) c[i + j] += ai * b.coeff(j);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b, double div_tol) {
    if (std::abs(b.coeff(0)) <= div_tol) {
        throw NearZeroConstantTerm("series div: |b_0| below tolerance (division at a zero)");
    }
    const int n = std::max(a.order(), b.order());
    std::vector<Complex> c(n + 1);
    const Complex inv0 = 1.0 / b.coeff(0);
    for (int k = 0; k <= n; ++k) {
        Complex s = a.coeff(k);
        for (int j = 0; j < k; ++j) s -= c[j] * b.coeff(k - j);
        c[k] = s * inv0;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries differentiate(const TruncatedSeries& a) {
    const int n = std::max(a.order() - 1, 0);
    std::vector<Complex> c(n + 1, Complex{});
    for (int k = 0; k <= n; ++k) c[k] = static_cast<double>(k + 1) * a.coeff(k + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries integrate_from_zero(const TruncatedSeries& a) {
    std::vector<Complex> c(a.order() + 2, Complex{});
    for (int k = 0; k <= a.order(); ++k) c[k + 1] = a.coeff(k) / static_cast<double>(k + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries compose_inner_zero(const TruncatedSeries& outer, const TruncatedSeries& inner,
                                   double tol) {
    if (std::abs(inner.coeff(0)) > tol) {
        throw NonzeroInnerConstant(
            "compose_inner_zero: inner map does not fix the origin; "
            "use pointwise evaluation + extract_coeffs");
    }
    const int n = outer.order();
    // Horner over the outer coefficients: r = c_N, r = c_{N-1} + inner*r, ...
    TruncatedSeries result = TruncatedSeries::constant(outer.coeff(n), n);
    for (int k = n - 1; k >= 0; --k) {
        result = mul(result, inner);
        result = add(result, TruncatedSeries::constant(outer.coeff(k), n));
    }
    return result;
}

Complex evaluate(const TruncatedSeries& a, Complex z, double r_max) {
    if (std::abs(z) > r_max) {
        throw OutsideEvaluationDisk("series evaluate: |z| > r_max, truncation error unbounded");
    }
    Complex r{};
    for (int k = a.order(); k >= 0; --k) r = r * z + a.coeff(k);
    return r;
}

namespace {

// Discrete Cauchy integral at M samples, computed entirely in long double.
// Returns coefficients 0..order.
std::vector<ComplexHP> dft_coeffs(const PointEvaluatorHP& eval, int order, long double rho, int M) {
    constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    std::vector<ComplexHP> samples(M);
    for (int m = 0; m < M; ++m) {
        const long double t = two_pi * m / M;
        samples[m] = eval(ComplexHP(rho * std::cos(t), rho * std::sin(t)));
    }
    std::vector<ComplexHP> out(order + 1);
    long double rp = 1.0L;
    for (int n = 0; n <= order; ++n) {
        // Neumaier-compensated accumulation; the 1/rho^n amplification makes
        // the raw sum cancellation-sensitive.
        long double sr = 0, cr = 0, si = 0, ci = 0;
        auto acc = [](long double& s, long double& comp, long double v) {
            const long double t = s + v;
            if (std::fabs(s) >= std::fabs(v)) comp += (s - t) + v;
            else comp += (v - t) + s;
            s = t;
        };
        for (int m = 0; m < M; ++m) {
            const long double ang = -two_pi * static_cast<long double>((static_cast<long long>(n) * m) % M) / M;
            const ComplexHP tw(std::cos(ang), std::sin(ang));
            const ComplexHP term = samples[m] * tw;
            acc(sr, cr, term.real());
            acc(si, ci, term.imag());
        }
        out[n] = ComplexHP(sr + cr, si + ci) / static_cast<long double>(M) / rp;
        rp *= rho;
    }
    return out;
}

TruncatedSeries extract_impl(const PointEvaluatorHP& eval, int order, double rho,
                             int oversample, double coeff_tol) {
    if (!(rho > 0.0 && rho < 1.0)) throw Error("extract_coeffs: rho must be in (0,1)");
    if (order < 0) throw Error("extract_coeffs: negative order");
    const int M = oversample * (order + 1);
    const auto c1 = dft_coeffs(eval, order, rho, M);
    const auto c2 = dft_coeffs(eval, order, rho, 2 * M);
    long double worst = 0;
    for (int n = 0; n <= order; ++n) worst = std::max(worst, std::abs(c1[n] - c2[n]));
    if (worst > coeff_tol) {
        throw AliasingTooLarge("extract_coeffs: aliasing estimate " + std::to_string(double(worst)) +
                               " exceeds tolerance; reduce rho or raise the order");
    }
    std::vector<Complex> out(order + 1);
    for (int n = 0; n <= order; ++n) {
        out[n] = Complex(static_cast<double>(c2[n].real()), static_cast<double>(c2[n].imag()));
    }
    return TruncatedSeries(std::move(out));
}

}  // namespace

TruncatedSeries extract_coeffs(const PointEvaluator& eval, int order, double rho,
                               int oversample, double coeff_tol) {
    PointEvaluatorHP hp = [&eval](ComplexHP z) -> ComplexHP {
        const Complex w = eval(Complex(static_cast<double>(z.real()), static_cast<double>(z.imag())));
        return {w.real(), w.imag()};
    };
    return extract_impl(hp, order, rho, oversample, coeff_tol);
}

TruncatedSeries extract_coeffs(const PointEvaluatorHP& eval, int order, double rho,
                               int oversample, double coeff_tol) {
    return extract_impl(eval, order, rho, oversample, coeff_tol);
}

}  // namespace chm
