#pragma once

#include <cstddef>
#include <variant>

namespace crs {

/// The complex sphere S^{2n+1} ⊂ C^{n+1}.
class SphereGeometry {
public:
  /// Upper bound on n; sample buffers are sized from it.
  static constexpr int kMaxN = 31;

  explicit SphereGeometry(int n);

  int n() const noexcept { return n_; }
  /// Complex dimension of the ambient space, n + 1.
  int axes() const noexcept { return n_ + 1; }
  /// Homogeneous dimension Q = 2n + 2.
  int Q() const noexcept { return 2 * n_ + 2; }
  /// Unnormalized area 2 π^{n+1} / n!.
  double surface_area() const noexcept { return surface_area_; }
  double log_surface_area() const noexcept { return log_surface_area_; }

  friend bool operator==(const SphereGeometry& a, const SphereGeometry& b) { return a.n_ == b.n_; }

private:
  int n_;
  double surface_area_;
  double log_surface_area_;
};

/// Bidegree (j, k): degree j in z and k in z̄.
struct SpectralIndex {
  int j = 0;
  int k = 0;

  SpectralIndex() = default;
  SpectralIndex(int j_, int k_);

  friend bool operator==(const SpectralIndex&, const SpectralIndex&) = default;
};

// Which diagonal operator an eigenvalue belongs to.
struct Intertwining {
  double d;
};
struct ConditionalQ {};
struct HLSKernel {
  double lambda;
};
struct WeightedHLSKernel {
  double alpha;
};
using OperatorKind = std::variant<Intertwining, ConditionalQ, HLSKernel, WeightedHLSKernel>;

/// Throws DomainError if the kind's parameter is outside its range for geom.
void validate(const SphereGeometry& geom, const OperatorKind& kind);

}  // namespace crs
