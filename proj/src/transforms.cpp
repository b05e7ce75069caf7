#include "chm/transforms.hpp"

#include <cmath>

namespace chm {

namespace {

void check_preconditions(const ClassMembership& cert, Complex a) {
    if (!cert.in_K0H) {
        throw MembershipNotCertified("koebe_transform: f is not certified in K_H^0");
    }
    if (std::abs(a) > kTransformACap) {
        throw ACapExceeded("koebe_transform: |a| exceeds the configured cap");
    }
}

}  // namespace

AnalyticMap disk_automorphism(Complex a, int order) {
    if (std::abs(a) >= 1.0) throw Error("disk_automorphism: |a| must be < 1");
    const Complex ab = std::conj(a);
    const double one_m = 1.0 - std::norm(a);
    auto value = [a, ab](Complex z) { return (a - z) / (1.0 - ab * z); };
    auto deriv = [ab, one_m](Complex z) {
        const Complex den = 1.0 - ab * z;
        return -one_m / (den * den);
    };
    // c_0 = a, c_n = -(1 - |a|^2) conj(a)^{n-1}
    std::vector<Complex> c(order + 1);
    c[0] = a;
    Complex p = 1.0;
    for (int n = 1; n <= order; ++n) {
        c[n] = -one_m * p;
        p *= ab;
    }
    return make_analytic("phi_a", value, deriv, TruncatedSeries(std::move(c)));
}

TransformResult koebe_transform(const HarmonicMap& f, const ClassMembership& cert, Complex a,
                                int series_order) {
    check_preconditions(cert, a);
    const AnalyticMap phi_a = disk_automorphism(a, series_order);

    const Complex hpa = f.h.deriv(a);
    const Complex gpa = f.g.deriv(a);
    if (std::abs(hpa) < 1e-12) throw VanishingDerivative("koebe_transform: h'(a) = 0");
    const Complex wa = gpa / hpa;
    if (std::abs(1.0 - std::norm(wa)) < 1e-6) {
        throw IllConditioned("koebe_transform: 1 - |omega(a)|^2 too small");
    }
    const Complex mu = hpa / std::conj(hpa);

    // D = d/dz [numerator of H_a] at 0 = -(1 - |a|^2) h'(a) (1 - |omega(a)|^2)
    const double one_m = 1.0 - std::norm(a);
    const Complex D = -one_m * hpa * (1.0 - std::norm(wa));
    const Complex Dc = std::conj(D);

    const Complex ha = f.h.value(a);
    const Complex ga = f.g.value(a);
    const Complex wab = std::conj(wa);

    auto Hv = [=, hv = f.h.value, gv = f.g.value, pv = phi_a.value](Complex z) {
        const Complex w = pv(z);
        return ((hv(w) - ha) - wab * (gv(w) - ga)) / D;
    };
    auto Hp = [=, hd = f.h.deriv, gd = f.g.deriv, pv = phi_a.value, pd = phi_a.deriv](Complex z) {
        const Complex w = pv(z);
        return (hd(w) - wab * gd(w)) * pd(z) / D;
    };
    auto Gv = [=, hv = f.h.value, gv = f.g.value, pv = phi_a.value](Complex z) {
        const Complex w = pv(z);
        return ((gv(w) - ga) - wa * (hv(w) - ha)) / Dc;
    };
    auto Gp = [=, hd = f.h.deriv, gd = f.g.deriv, pv = phi_a.value, pd = phi_a.deriv](Complex z) {
        const Complex w = pv(z);
        return (gd(w) - wa * hd(w)) * pd(z) / Dc;
    };

    TransformResult out{
        HarmonicMap{"F_a(" + f.label + ")",
                    make_analytic_sampled("H_a", Hv, Hp, series_order, 0.8),
                    make_analytic_sampled("G_a", Gv, Gp, series_order, 0.8)},
        mu, wa, 0.0, 0.0, 0.0};
    out.residual_F0 = std::abs(evaluate_harmonic(out.F, Complex{}));
    out.residual_Hp0 = std::abs(out.F.h.deriv(Complex{}) - 1.0);
    out.residual_Gp0 = std::abs(out.F.g.deriv(Complex{}));
    return out;
}

AnalyticMap transformed_dilatation(const HarmonicMap& f, const ClassMembership& cert, Complex a) {
    check_preconditions(cert, a);
    const Complex hpa = f.h.deriv(a);
    if (std::abs(hpa) < 1e-12) throw VanishingDerivative("transformed_dilatation: h'(a) = 0");
    const Complex wa = f.g.deriv(a) / hpa;
    if (std::abs(1.0 - std::norm(wa)) < 1e-6) {
        throw IllConditioned("transformed_dilatation: 1 - |omega(a)|^2 too small");
    }
    const Complex mu = hpa / std::conj(hpa);
    const Complex ab = std::conj(a);
    const Complex wab = std::conj(wa);
    auto value = [=, hd = f.h.deriv, gd = f.g.deriv](Complex z) {
        const Complex w = (a - z) / (1.0 - ab * z);
        const Complex om = gd(w) / hd(w);
        return -mu * (wa - om) / (1.0 - wab * om);
    };
    return AnalyticMap{"omega_a(" + f.label + ")", value, numerical_derivative(value),
                       extract_coeffs(value, 32, 0.8)};
}

}  // namespace chm
