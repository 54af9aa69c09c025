#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "crsphere/monte_carlo.hpp"
#include "crsphere/report.hpp"
#include "crsphere/sphere.hpp"

// Monte Carlo checks of the integral inequalities on concrete functions.
// A Monte Carlo verdict can only fail to reject: "holds" means the sampled
// slack is within (equality) or beyond (strict) 3 combined standard errors.

namespace crs::verify {

using sphere::cplx;
using sphere::HarmonicExpansion;

inline constexpr double kSigmas = 3.0;

struct HlsExponent {
  double lambda;
};
struct SobolevExponent {
  double d;
};

/// c / |1 − ζ̄·ξ|^{(2Q−λ)/2} (HLS) or c |1 − ζ̄·ξ|^{(d−Q)/2} (Sobolev), c = 1.
struct ExtremalSpec {
  std::vector<cplx> zeta;
  std::variant<HlsExponent, SobolevExponent> kind;

  /// Power of |1 − ζ̄·ξ|.
  double exponent(const SphereGeometry& geom) const;
  /// |ζ| < 1 and matching dimension; the kind's parameter in (0, Q).
  void validate(const SphereGeometry& geom) const;
  cplx operator()(sphere::PointView xi) const;
};

/// |∫∫ f̄(ξ) f(η) |1−ξ·η̄|^{−λ/2}| ≤ C_{λ,n} ‖f‖_p², p ∈ (2Q/(2Q−λ), 2].
IneqReport verify_subcritical_hls(const SphereGeometry& geom, double lambda, double p,
                                  const HarmonicExpansion& f, const SampleSpec& spec);

/// C_{λ,n} Σ γ_{jk}^λ |c|² ∫|Y|², the exact value of the HLS double integral.
double hls_spectral_form(const SphereGeometry& geom, double lambda, const HarmonicExpansion& f);

/// Σ γ_{jk}^λ ‖Y_{jk}‖² ≤ ‖f‖₂², exact from coefficients.
IneqReport verify_hls_spectral(const SphereGeometry& geom, double lambda,
                               const HarmonicExpansion& f);

/// ‖f‖_q² ≤ ∫ f A_d f / λ_0(d)², q = 2Q/(Q−d).
IneqReport verify_sobolev_conformal(const SphereGeometry& geom, double d,
                                    const HarmonicExpansion& f, const SampleSpec& spec);

/// ‖f‖_q² ≤ B_{d,q} (∫ f A_d f − λ_0(d)² ‖f‖₂²) + ‖f‖₂², 2 ≤ q < 2Q/(Q−d).
IneqReport verify_sobolev_subcritical(const SphereGeometry& geom, double d, double q,
                                      const HarmonicExpansion& f, const SampleSpec& spec);

/// Equality test LHS/(C_{λ,n} ‖f‖_p²) = 1, p = 2Q/(2Q−λ), for the HLS extremal
/// optionally plus a perturbation. Points are drawn from the Poisson–Szegő
/// density centred at ζ, which flattens the integrand. Requires |ζ| ≤ 0.9.
/// lhs = ratio, rhs = 1: a ratio below 1 − 3σ reads as holds_strict.
IneqReport verify_extremal_hls(const SphereGeometry& geom, double lambda, const ExtremalSpec& ext,
                               const SampleSpec& spec,
                               const std::optional<HarmonicExpansion>& perturbation = std::nullopt);

/// 0 ≤ ∫ f A'_Q f / (2(n+1)!) + ∫ f − log ∫ e^f, for f real pluriharmonic.
IneqReport verify_onofri(const SphereGeometry& geom, const HarmonicExpansion& f,
                         const SampleSpec& spec);

/// ‖f‖_q² ≤ (q−2)/(n+1)! ∫ f A'_Q f + ‖f‖₂², q ≥ 2, f real pluriharmonic.
IneqReport verify_sobolev_end(const SphereGeometry& geom, double q, const HarmonicExpansion& f,
                              const SampleSpec& spec);

/// Throws DomainError unless every term has bidegree (j,0) or (0,k) and f is
/// real at 16 sample points (|Im f| ≤ 1e-12 relative).
void require_real_pluriharmonic(const SphereGeometry& geom, const HarmonicExpansion& f);

}  // namespace crs::verify
