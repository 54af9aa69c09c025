#pragma once

#include "crsphere/geometry.hpp"

// Closed-form spectra of the operators diagonal on the bidegree decomposition
// of L²(S^{2n+1}), and the sharp constants built from them.

namespace crs::spectrum {

/// λ_j(d) = Γ((Q+d)/4 + j) / Γ((Q−d)/4 + j), 0 < d < Q.
double lambda_j(const SphereGeometry& geom, double d, int j);
double log_lambda_j(const SphereGeometry& geom, double d, int j);

/// Conditional intertwinor eigenvalue j (j+1) ... (j+n) on H_{j0} and H_{0j}.
double conditional_lambda(const SphereGeometry& geom, int j);

/// Eigenvalue of `kind` on H_{jk}. ConditionalQ requires j = 0 or k = 0.
double intertwine_eig(const SphereGeometry& geom, const OperatorKind& kind, SpectralIndex idx);

/// Normalized HLS eigenvalue γ_{jk}^λ ∈ (0, 1], 0 < λ < Q.
double hls_gamma(const SphereGeometry& geom, double lambda, SpectralIndex idx);

/// Sharp HLS constant C_{λ,n} = ∫ |1 − ξ·η̄|^{−λ/2} dη.
double hls_constant(const SphereGeometry& geom, double lambda);

/// Eigenvalue E_{jk} of the kernel |1 − ξ·η̄|^{−2α}, −1 < α < (n+1)/2.
/// At α = 0 this is the projection onto constants.
double fh_eigenvalue_closed(const SphereGeometry& geom, double alpha, SpectralIndex idx);

/// Eigenvalue of the kernel |ξ·η̄|² |1 − ξ·η̄|^{−2α}, −1 < α < (n+1)/2.
///
/// The correction factor is evaluated with the numerator read as
/// 2jk + n(j + k − 1 + α). The poles at α = 0 and α = 1 are removable;
/// the expression is rewritten with (α)_{j−1} = Γ(α+j−1)/Γ(α) so that no
/// separate limit branch is needed.
double fh_eigenvalue_weighted(const SphereGeometry& geom, double alpha, SpectralIndex idx);

/// Γ²((Q−d)/4) / Γ²((Q+d)/4) = 1/λ_0(d)², the conformal Sobolev constant.
double conformal_sobolev_constant(const SphereGeometry& geom, double d);

/// 8(q−2)/(d(Q−d)) · Γ²((Q−d)/4 + 1) / Γ²((Q+d)/4), the subcritical Sobolev constant.
double subcritical_sobolev_constant(const SphereGeometry& geom, double d, double q);

/// Critical exponent 2Q/(Q−d).
double critical_exponent(const SphereGeometry& geom, double d);

}  // namespace crs::spectrum
