#include "crsphere/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "crsphere/errors.hpp"
#include "crsphere/special_fn.hpp"

namespace crs {

SphereGeometry::SphereGeometry(int n) : n_(n) {
  if (n < 1 || n > kMaxN) {
    throw DomainError("SphereGeometry: n must lie in [1, " + std::to_string(kMaxN) + "], got " +
                      std::to_string(n));
  }
  log_surface_area_ =
      std::log(2.0) + (n + 1) * std::log(std::numbers::pi) - special::log_factorial(n);
  surface_area_ = std::exp(log_surface_area_);
}

SpectralIndex::SpectralIndex(int j_, int k_) : j(j_), k(k_) {
  if (j < 0 || k < 0) throw DomainError("SpectralIndex: j and k must be >= 0");
}

void validate(const SphereGeometry& geom, const OperatorKind& kind) {
  const double Q = geom.Q();
  struct Visitor {
    double Q;
    int n;
    void operator()(const Intertwining& op) const {
      if (!(op.d > 0.0 && op.d < Q)) {
        throw DomainError("intertwining order d must lie in (0, Q)");
      }
    }
    void operator()(const ConditionalQ&) const {}
    void operator()(const HLSKernel& op) const {
      if (!(op.lambda > 0.0 && op.lambda < Q)) {
        throw DomainError("HLS parameter lambda must lie in (0, Q)");
      }
    }
    void operator()(const WeightedHLSKernel& op) const {
      if (!(op.alpha > -1.0 && op.alpha < (n + 1) / 2.0)) {
        throw DomainError("kernel exponent alpha must lie in (-1, (n+1)/2)");
      }
    }
  };
  std::visit(Visitor{Q, geom.n()}, kind);
}

}  // namespace crs
