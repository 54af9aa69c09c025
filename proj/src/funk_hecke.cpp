#include "crsphere/funk_hecke.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "crsphere/errors.hpp"
#include "crsphere/quadrature.hpp"
#include "crsphere/special_fn.hpp"

namespace crs::funk_hecke {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

struct AngleNode {
  double phi;
  double weight;
  double sin_half_sq;  // sin²(φ/2)
};

// Disc point z = r e^{−iφ}; 1 − r kept separately for the singular kernels.
struct DiscPoint {
  double r;
  double one_minus_r;
  const AngleNode& angle;
};

bool is_singular(const SphereGeometry& geom, const KernelSpec& kernel) {
  struct Visitor {
    int n;
    // |1 − z|^{−2α} is a polynomial only at α = 0; otherwise it has a cusp or a pole at z = 1
    bool operator()(const PowerKernel& k) const { return check(k.alpha) != 0.0; }
    bool operator()(const WeightedPowerKernel& k) const { return check(k.alpha) != 0.0; }
    bool operator()(const ConstantKernel&) const { return false; }
    bool operator()(const CustomKernel& k) const {
      if (!k.eval) throw DomainError("custom kernel has no evaluator");
      return k.singular_at_one;
    }
    double check(double alpha) const {
      if (!(alpha > -1.0 && alpha < (n + 1) / 2.0)) {
        throw DomainError("kernel exponent alpha must lie in (-1, (n+1)/2) for integrability");
      }
      return alpha;
    }
  };
  return std::visit(Visitor{geom.n()}, kernel);
}

cplx evaluate(const KernelSpec& kernel, const DiscPoint& p) {
  struct Visitor {
    const DiscPoint& p;
    // |1 − z|² = (1 − r)² + 4 r sin²(φ/2)
    double dist_sq() const {
      return p.one_minus_r * p.one_minus_r + 4.0 * p.r * p.angle.sin_half_sq;
    }
    cplx operator()(const PowerKernel& k) const { return std::pow(dist_sq(), -k.alpha); }
    cplx operator()(const WeightedPowerKernel& k) const {
      return p.r * p.r * std::pow(dist_sq(), -k.alpha);
    }
    cplx operator()(const ConstantKernel&) const { return 1.0; }
    cplx operator()(const CustomKernel& k) const {
      return k.eval(std::polar(p.r, -p.angle.phi));
    }
  };
  return std::visit(Visitor{p}, kernel);
}

std::vector<AngleNode> angle_nodes(int count, bool singular) {
  std::vector<AngleNode> nodes;
  auto push = [&](double phi, double w) {
    const double s = std::sin(0.5 * phi);
    nodes.push_back({phi, w, s * s});
  };
  if (singular) {
    // split at φ = 0 so that both halves cluster nodes at the singular angle
    const auto rule = quadrature::tanh_sinh(count / 2);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      push(-0.5 * kPi * rule.one_minus[i], 0.5 * kPi * rule.w[i]);
    }
    for (std::size_t i = 0; i < rule.size(); ++i) {
      push(0.5 * kPi * rule.one_plus[i], 0.5 * kPi * rule.w[i]);
    }
  } else {
    const auto rule = quadrature::periodic_trapezoid(count);
    for (std::size_t i = 0; i < rule.size(); ++i) push(kPi * rule.x[i], kPi * rule.w[i]);
  }
  return nodes;
}

cplx integrate(const SphereGeometry& geom, const KernelSpec& kernel, SpectralIndex idx,
               int nodes_t, int nodes_phi, bool singular) {
  const int n = geom.n();
  const int m = std::min(idx.j, idx.k);
  const int diff = idx.j - idx.k;
  const int b = std::abs(diff);

  const auto t_rule =
      singular ? quadrature::tanh_sinh(nodes_t) : quadrature::gauss_legendre(nodes_t);
  const auto angles = angle_nodes(nodes_phi, singular);

  std::vector<cplx> phase(angles.size());
  for (std::size_t a = 0; a < angles.size(); ++a) {
    phase[a] = angles[a].weight * std::polar(1.0, diff * angles[a].phi);
  }

  cplx total = 0.0;
  for (std::size_t i = 0; i < t_rule.size(); ++i) {
    const double om = t_rule.one_minus[i];
    const double op = t_rule.one_plus[i];
    const double r = std::sqrt(0.5 * op);
    const double one_minus_r = 0.5 * om / (1.0 + r);

    cplx inner = 0.0;
    for (std::size_t a = 0; a < angles.size(); ++a) {
      inner += evaluate(kernel, DiscPoint{r, one_minus_r, angles[a]}) * phase[a];
    }
    const double t = std::clamp(t_rule.x[i], -1.0, 1.0);
    const double weight = std::pow(om, n - 1) * std::pow(op, 0.5 * b) *
                          special::jacobi_poly(m, n - 1.0, static_cast<double>(b), t);
    total += t_rule.w[i] * weight * inner;
  }

  const double log_prefactor = n * std::log(kPi) + special::log_factorial(m) -
                               (n + 0.5 * b) * std::log(2.0) - special::log_factorial(m + n - 1) -
                               geom.log_surface_area();
  return std::exp(log_prefactor) * total;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (nodes_t < 8) throw DomainError("QuadratureSpec: nodes_t must be >= 8");
  if (nodes_phi < 16) throw DomainError("QuadratureSpec: nodes_phi must be >= 16");
}

FhResult fh_eigenvalue_quadrature(const SphereGeometry& geom, const KernelSpec& kernel,
                                  SpectralIndex idx, const QuadratureSpec& quad) {
  quad.validate();
  const bool singular = is_singular(geom, kernel);

  FhResult result;
  result.double_exponential = singular;
  result.value = integrate(geom, kernel, idx, quad.nodes_t, quad.nodes_phi, singular);
  const cplx coarse = integrate(geom, kernel, idx, quad.nodes_t / 2, quad.nodes_phi / 2, singular);
  result.rel_change = std::abs(result.value - coarse) / std::max(std::abs(result.value), 1e-10);
  result.converged = result.rel_change <= kConvergenceThreshold;
  return result;
}

std::string describe(const KernelSpec& kernel) {
  struct Visitor {
    std::string operator()(const PowerKernel& k) const {
      return "power(alpha=" + std::to_string(k.alpha) + ")";
    }
    std::string operator()(const WeightedPowerKernel& k) const {
      return "weighted(alpha=" + std::to_string(k.alpha) + ")";
    }
    std::string operator()(const ConstantKernel&) const { return "constant"; }
    std::string operator()(const CustomKernel&) const { return "custom"; }
  };
  return std::visit(Visitor{}, kernel);
}

}  // namespace crs::funk_hecke
