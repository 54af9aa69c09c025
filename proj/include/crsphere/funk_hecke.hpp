#pragma once

#include <complex>
#include <functional>
#include <string>
#include <variant>

#include "crsphere/geometry.hpp"

// Eigenvalues of zonal kernels K(ξ·η̄) on H_{jk}, computed from the
// Jacobi-weighted double integral over the unit disc:
//
//   (1/|S^{2n+1}|) π^n m! / (2^{n+|j−k|/2} (m+n−1)!)
//     ∫_{−1}^{1} dt (1−t)^{n−1} (1+t)^{|j−k|/2} P_m^{(n−1,|j−k|)}(t)
//     ∫_{−π}^{π} dφ K(e^{−iφ} √((1+t)/2)) e^{i(j−k)φ},   m = min(j, k).
//
// Used as an oracle independent of the closed-form spectra.

namespace crs::funk_hecke {

/// |1 − z|^{−2α}
struct PowerKernel {
  double alpha;
};
/// |z|² |1 − z|^{−2α}
struct WeightedPowerKernel {
  double alpha;
};
struct ConstantKernel {};
/// Arbitrary K(z) on the closed unit disc. Custom kernels are integrated with
/// the endpoint-clustering rule unless `singular_at_one` is false.
struct CustomKernel {
  std::function<std::complex<double>(std::complex<double>)> eval;
  bool singular_at_one = true;
};

using KernelSpec = std::variant<PowerKernel, WeightedPowerKernel, ConstantKernel, CustomKernel>;

struct QuadratureSpec {
  int nodes_t = 256;
  int nodes_phi = 512;

  void validate() const;
};

struct FhResult {
  std::complex<double> value;
  /// |value − value at half the nodes| / max(|value|, 1e-10)
  double rel_change = 0.0;
  bool converged = true;
  /// true when the tanh–sinh product rule was used
  bool double_exponential = false;
};

/// Relative change between node levels above which the result is flagged.
inline constexpr double kConvergenceThreshold = 1e-6;

FhResult fh_eigenvalue_quadrature(const SphereGeometry& geom, const KernelSpec& kernel,
                                  SpectralIndex idx, const QuadratureSpec& quad = {});

std::string describe(const KernelSpec& kernel);

}  // namespace crs::funk_hecke
