#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "crsphere/geometry.hpp"
#include "crsphere/monte_carlo.hpp"

namespace crs::sphere {

using cplx = std::complex<double>;
using PointView = std::span<const cplx>;
using SphereFunction = std::function<cplx(PointView)>;

/// Fixed-capacity coordinate buffer for hot loops.
using PointBuffer = std::array<cplx, SphereGeometry::kMaxN + 1>;

/// A point of S^{2n+1}: Σ|ξ_i|² = 1 within 1e-14.
class SpherePoint {
public:
  /// Validates the norm; throws DomainError otherwise.
  explicit SpherePoint(std::vector<cplx> coords);
  /// Rescales a nonzero vector onto the sphere.
  static SpherePoint normalized(std::vector<cplx> coords);

  PointView coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const cplx& operator[](std::size_t i) const { return coords_[i]; }

private:
  std::vector<cplx> coords_;
};

/// ξ·η̄ = Σ ξ_i conj(η_i)
cplx hermitian_dot(PointView xi, PointView eta);

/// coefficient · ξ_{axis_z}^j · conj(ξ_{axis_zbar})^k, axes 0-based.
/// When j > 0 and k > 0 the axes differ, so the monomial is harmonic and
/// lies in H_{jk}.
struct HarmonicTerm {
  int j = 0;
  int k = 0;
  int axis_z = 0;
  int axis_zbar = 0;
  cplx coefficient = 1.0;

  cplx basis_value(PointView p) const;
};

class HarmonicExpansion {
public:
  HarmonicExpansion() = default;
  explicit HarmonicExpansion(std::vector<HarmonicTerm> terms) : terms_(std::move(terms)) {}

  static HarmonicExpansion constant(cplx c);

  HarmonicExpansion& add(const HarmonicTerm& t);
  /// Adds c ξ_a^j + conj(c) conj(ξ_a)^j, a real pluriharmonic pair (j ≥ 1).
  HarmonicExpansion& add_real_pair(cplx c, int j, int axis);

  const std::vector<HarmonicTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  cplx operator()(PointView p) const;
  SphereFunction as_function() const;

private:
  std::vector<HarmonicTerm> terms_;
};

/// Checks axes and the harmonic invariant for geom. With `require_orthogonal`
/// also rejects two terms with the same torus character (the only case in
/// which monomial terms fail to be orthogonal); throws NonOrthogonalError.
void validate(const SphereGeometry& geom, const HarmonicExpansion& f, bool require_orthogonal);

/// Uniform points on S^{2n+1} addressed by (seed, lane, item index): n+1
/// standard complex Gaussians from Philox blocks, normalized.
class UniformSampler {
public:
  UniformSampler(const SphereGeometry& geom, std::uint64_t seed, std::uint32_t lane = 0);

  void draw(std::uint64_t index, std::span<cplx> out) const;
  int axes() const noexcept { return axes_; }

private:
  int axes_;
  std::uint32_t lane_;
  std::array<std::uint32_t, 2> key_;
};

/// Where Monte Carlo points come from. Uniform, or the Poisson–Szegő density
/// (1−|ζ|²)^{n+1} / |1 − ξ·ζ̄|^{2(n+1)} realized as the image of uniform points
/// under the ball automorphism exchanging 0 and ζ. Each draw returns the
/// importance weight dξ/dP.
class PointSource {
public:
  static PointSource uniform(const SphereGeometry& geom);
  static PointSource poisson_szego(const SphereGeometry& geom, std::vector<cplx> center);

  double draw(const UniformSampler& sampler, std::uint64_t index, std::span<cplx> out) const;
  bool is_uniform() const noexcept { return center_.empty(); }
  const std::vector<cplx>& center() const noexcept { return center_; }

private:
  PointSource(int axes, std::vector<cplx> center);
  int axes_;
  std::vector<cplx> center_;
  double center_norm_sq_ = 0.0;
};

/// Ball automorphism φ_a with φ_a(0) = a, φ_a(a) = 0, |a| < 1; an involution.
void ball_automorphism(PointView a, PointView z, std::span<cplx> out);

/// Poisson–Szegő density of the pushforward of dξ under φ_a.
double poisson_szego_density(const SphereGeometry& geom, PointView a, PointView xi);

std::vector<SpherePoint> sample_uniform(const SphereGeometry& geom, const SampleSpec& spec);

/// ∫ |ξ_1|^{2a} |ξ_2|^{2b} dξ = a! b! n! / (n+a+b)!
double moment_exact(const SphereGeometry& geom, int a, int b);

cplx evaluate(const HarmonicExpansion& f, const SpherePoint& p);

/// Σ |c|² moment(j, k) over orthogonal terms.
double l2_norm_sq_exact(const SphereGeometry& geom, const HarmonicExpansion& f);
double l2_norm_exact(const SphereGeometry& geom, const HarmonicExpansion& f);

/// ∫ f A f dξ for an operator diagonal on the bidegree decomposition.
double quadratic_form(const SphereGeometry& geom, const HarmonicExpansion& f,
                      const OperatorKind& kind);

/// (∫ |f|^q dξ)^{1/q}, standard error by the delta method. Uniform points
/// are used in antithetic pairs (ξ, −ξ), which cancels odd-degree noise;
/// `count` then counts pairs.
McEstimate<double> lq_norm_mc(const SphereGeometry& geom, const SphereFunction& f, double q,
                              const SampleSpec& spec,
                              const PointSource* source = nullptr);

McEstimate<cplx> mean_mc(const SphereGeometry& geom, const SphereFunction& f,
                         const SampleSpec& spec);

/// ∫ |1 − p·η̄|^{−λ/2} f(η) dη. Samples f(η) − f(p) against the kernel and
/// adds f(p) times the exact kernel mass, so the variance stays finite for all λ < Q.
McEstimate<cplx> kernel_apply_mc(const SphereGeometry& geom, double lambda,
                                 const SphereFunction& f, const SpherePoint& p,
                                 const SampleSpec& spec);

/// ∫∫ conj(f(ξ)) g(η) |1 − ξ·η̄|^{−λ/2} dξ dη over independent point pairs.
McEstimate<cplx> hls_double_integral_mc(const SphereGeometry& geom, double lambda,
                                        const SphereFunction& f, const SphereFunction& g,
                                        const SampleSpec& spec,
                                        const PointSource* source = nullptr);

/// ∫ e^{Re f} dξ over antithetic pairs (ξ, −ξ).
McEstimate<double> exp_integral_mc(const SphereGeometry& geom, const SphereFunction& f,
                                   const SampleSpec& spec);

/// |1 − ξ·η̄|^{−λ/2}
double hls_kernel(PointView xi, PointView eta, double lambda);

}  // namespace crs::sphere
