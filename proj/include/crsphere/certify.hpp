#pragma once

#include <span>
#include <vector>

#include "crsphere/geometry.hpp"
#include "crsphere/report.hpp"
#include "crsphere/special_fn.hpp"

// Finite-box, floating-point certification of the spectral inequalities
// behind the subcritical Sobolev bound. No interval arithmetic: every report
// carries its slack so distance from the rounding floor stays visible.

namespace crs::certify {

struct CertGrid {
  SphereGeometry geom;
  double d;
  double q;  // 2 < q < 2Q/(Q−d)
  int j_max = 30;
  int k_max = 30;
  double equality_tol = 1e-10;  // relative
  double strict_margin = 1e-12;
  /// Multiplies every right-hand side; 1 except when forcing failures in tests.
  double rhs_scale = 1.0;

  void validate() const;
  /// Conjugate exponent q' = q/(q−1).
  double q_conj() const { return q / (q - 1.0); }
};

struct SpectralSides {
  double lhs;
  double rhs;
};

/// Both sides of
///   λ_j(d₁)λ_k(d₁)/λ_0(d₁)² ≤ 1 + 8(q−2)/(d(Q−d)) Γ²((Q−d)/4+1)/Γ²((Q+d)/4) (λ_jλ_k(d) − λ_0(d)²)
/// with d₁ = Q(1 − 2/q).
SpectralSides spectral_ineq_sides(const CertGrid& grid, SpectralIndex idx);

/// One report per (j, k) in [0, j_max] × [0, k_max], row-major in j.
std::vector<IneqReport> certify_spectral_ineq(const CertGrid& grid);

/// k-derivative comparison for j + k ≥ 1 and the two facts it rests on.
struct DerivativeCertificate {
  IneqReport derivative;        // ∂_k LHS ≤ ∂_k RHS
  IneqReport numerator_fact;    // Γ(j+Q/2q')Γ(k+Q/2q')/Γ²(Q/2q') ≤ same at (Q+d)/4
  IneqReport denominator_fact;  // Γ(j+s)Γ(k+s)/(sΓ²(s)) at s=(Q−d)/4 ≤ same at s=Q/2q
  IneqReport termwise;          // series terms at l = 0

  std::vector<IneqReport> all() const { return {derivative, numerator_fact, denominator_fact, termwise}; }
};

DerivativeCertificate certify_derivative_comparison(const CertGrid& grid, SpectralIndex idx,
                                                    const special::AccuracySpec& acc = {});

/// The two derivative sides written as the printed series
///   LHS·(Q/2q)·Σ_l (q−2)/((l+k)² + Q/2 (l+k) + (Q/2)²/(q q'))
///   (Q−d)/4 · λ_jλ_k/λ_0² · Σ_l (q−2)/((l+k)² + Q/2 (l+k) + (Q−d)(Q+d)/16)
/// summed directly to `terms` terms; used to cross-check the digamma route.
SpectralSides derivative_series_sides(const CertGrid& grid, SpectralIndex idx, long terms);

/// γ^{λ1}_{jk} ≤ γ^{λ2}_{jk} for λ1 < λ2. A strict result with slack below
/// `near_margin` gets a "near_equality" note.
IneqReport certify_kernel_comparison(const SphereGeometry& geom, double lambda1, double lambda2,
                                     SpectralIndex idx, double equality_tol = 1e-12,
                                     double near_margin = 1e-6);

/// Scaled eigenvalue 8(q−2)/(d(Q−d)) Γ²((Q−d)/4+1)/Γ²((Q+d)/4) λ_j(d)λ_0(d) on H_{j0}.
double limit_scaled_eigenvalue(const SphereGeometry& geom, double q, int j, double d);
/// Its d → Q⁻ target (q−2)/(n+1)! · j(j+1)···(j+n).
double limit_target(const SphereGeometry& geom, double q, int j);

struct LimitStudy {
  /// steps[i]: lhs = distance at d_i, rhs = distance at d_{i−1} (step 0 compares
  /// with itself). Distance is relative to the target, absolute when it is 0.
  std::vector<IneqReport> steps;
  bool monotone = true;
};

LimitStudy certify_limit_dQ(const SphereGeometry& geom, double q, int j,
                            std::span<const double> d_sequence);

/// γ^{Q−d}_{jk} λ_j(d) λ_k(d) = λ_0(d)², relative tolerance `rel_tol`. Reported as
/// lhs = |value − target|, rhs = 0, so the verdict is equality or violated.
IneqReport certify_duality_identity(const SphereGeometry& geom, double d, SpectralIndex idx,
                                    double rel_tol = 1e-11);

/// `count` interior Chebyshev points of (a, b), ascending.
std::vector<double> chebyshev_points(double a, double b, int count);

/// Minimum slack over reports that are not equalities (+inf if none).
double min_strict_slack(std::span<const IneqReport> reports);

}  // namespace crs::certify
