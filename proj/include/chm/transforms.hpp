#pragma once

#include "chm/mappings.hpp"

namespace chm {

/// Cap on |a| for transform use; keeps the composed evaluations away from the
/// unit circle where the numerics degrade.
inline constexpr double kTransformACap = 0.9;

/// Disk automorphism phi_a(z) = (a - z) / (1 - conj(a) z); an involution with
/// phi_a(0) = a and phi_a(a) = 0.
AnalyticMap disk_automorphism(Complex a, int order = kDefaultOrder);

struct TransformResult {
    HarmonicMap F;         ///< F_a = H_a + conj(G_a), renormalized to the class
    Complex mu;            ///< h'(a) / conj(h'(a))
    Complex omega_at_a;    ///< dilatation of f at a
    double residual_F0;    ///< |F(0)|
    double residual_Hp0;   ///< |H_a'(0) - 1|
    double residual_Gp0;   ///< |G_a'(0)|
};

/// The K_H^0-preserving transform:
///   H_a(z) = [(h(phi_a(z)) - h(a)) - conj(omega(a)) (g(phi_a(z)) - g(a))] / D
///   G_a(z) = [(g(phi_a(z)) - g(a)) - omega(a) (h(phi_a(z)) - h(a))] / conj(D)
/// where D is the exact derivative at 0 of the H_a numerator, so that
/// H_a(0) = G_a(0) = 0 and H_a'(0) = 1 hold as hard invariants (in particular
/// F_0 is the (-1)-rotation of f, since phi_0(z) = -z). Series are recovered by
/// contour sampling since phi_a does not fix the origin.
///
/// Requires a certified membership witness for f and |a| <= kTransformACap.
TransformResult koebe_transform(const HarmonicMap& f, const ClassMembership& cert, Complex a,
                                int series_order = kDefaultOrder);

/// Dilatation of F_a in closed form:
///   omega_a(z) = -mu_a (phi_{omega(a)} o omega o phi_a)(z).
/// Agrees with dilatation(koebe_transform(f, a).F) on the disk.
AnalyticMap transformed_dilatation(const HarmonicMap& f, const ClassMembership& cert, Complex a);

}  // namespace chm
