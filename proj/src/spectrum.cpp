#include "crsphere/spectrum.hpp"

#include <cmath>
#include <string>

#include "crsphere/errors.hpp"
#include "crsphere/special_fn.hpp"

namespace crs::spectrum {
namespace {

using special::log_gamma_ratio;

void require_order(const SphereGeometry& geom, double d) {
  if (!(d > 0.0 && d < geom.Q())) {
    throw DomainError("order d must lie in (0, Q=" + std::to_string(geom.Q()) + "), got " +
                      std::to_string(d));
  }
}

void require_lambda(const SphereGeometry& geom, double lambda) {
  if (!(lambda > 0.0 && lambda < geom.Q())) {
    throw DomainError("lambda must lie in (0, Q=" + std::to_string(geom.Q()) + "), got " +
                      std::to_string(lambda));
  }
}

void require_alpha(const SphereGeometry& geom, double alpha) {
  if (!(alpha > -1.0 && alpha < (geom.n() + 1) / 2.0)) {
    throw DomainError("alpha must lie in (-1, (n+1)/2), got " + std::to_string(alpha));
  }
}

// (x)_m / (y)_m for x > -1, y > 0
double pochhammer_quotient(double x, double y, int m) {
  if (m == 0) return 1.0;
  if (x == 0.0) return 0.0;
  if (x > 0.0) return std::exp(log_gamma_ratio(x + m, x) - log_gamma_ratio(y + m, y));
  return x * std::exp(log_gamma_ratio(x + m, x + 1.0) - log_gamma_ratio(y + m, y));
}

// n! Γ(n+1−2α) / Γ(n+1−α)²
double kernel_prefactor(int n, double alpha) {
  const double y = n + 1.0 - alpha;
  return std::exp(log_gamma_ratio(n + 1.0, y) + log_gamma_ratio(n + 1.0 - 2.0 * alpha, y));
}

}  // namespace

double log_lambda_j(const SphereGeometry& geom, double d, int j) {
  require_order(geom, d);
  if (j < 0) throw DomainError("lambda_j: j must be >= 0");
  const double Q = geom.Q();
  return log_gamma_ratio((Q + d) / 4.0 + j, (Q - d) / 4.0 + j);
}

double lambda_j(const SphereGeometry& geom, double d, int j) {
  return std::exp(log_lambda_j(geom, d, j));
}

double conditional_lambda(const SphereGeometry& geom, int j) {
  if (j < 0) throw DomainError("conditional_lambda: j must be >= 0");
  double p = 1.0;
  for (int i = 0; i <= geom.n(); ++i) p *= static_cast<double>(j + i);
  return p;
}

double intertwine_eig(const SphereGeometry& geom, const OperatorKind& kind, SpectralIndex idx) {
  validate(geom, kind);
  struct Visitor {
    const SphereGeometry& geom;
    SpectralIndex idx;
    double operator()(const Intertwining& op) const {
      return std::exp(log_lambda_j(geom, op.d, idx.j) + log_lambda_j(geom, op.d, idx.k));
    }
    double operator()(const ConditionalQ&) const {
      if (idx.j > 0 && idx.k > 0) {
        throw DomainError("conditional intertwinor is defined only on bidegrees (j,0) and (0,k)");
      }
      return conditional_lambda(geom, idx.j + idx.k);
    }
    double operator()(const HLSKernel& op) const {
      return hls_constant(geom, op.lambda) * hls_gamma(geom, op.lambda, idx);
    }
    double operator()(const WeightedHLSKernel& op) const {
      return fh_eigenvalue_weighted(geom, op.alpha, idx);
    }
  };
  return std::visit(Visitor{geom, idx}, kind);
}

double hls_gamma(const SphereGeometry& geom, double lambda, SpectralIndex idx) {
  require_lambda(geom, lambda);
  const double s = lambda / 4.0;
  const double t = (2.0 * geom.Q() - lambda) / 4.0;
  const double l = log_gamma_ratio(idx.j + s, s) + log_gamma_ratio(idx.k + s, s) -
                   log_gamma_ratio(idx.j + t, t) - log_gamma_ratio(idx.k + t, t);
  return std::exp(l);
}

double hls_constant(const SphereGeometry& geom, double lambda) {
  require_lambda(geom, lambda);
  const double Q = geom.Q();
  const double t = (2.0 * Q - lambda) / 4.0;
  return std::exp(log_gamma_ratio(Q / 2.0, t) + log_gamma_ratio((Q - lambda) / 2.0, t));
}

double fh_eigenvalue_closed(const SphereGeometry& geom, double alpha, SpectralIndex idx) {
  require_alpha(geom, alpha);
  const int n = geom.n();
  const double y = n + 1.0 - alpha;
  return kernel_prefactor(n, alpha) * pochhammer_quotient(alpha, y, idx.j) *
         pochhammer_quotient(alpha, y, idx.k);
}

double fh_eigenvalue_weighted(const SphereGeometry& geom, double alpha, SpectralIndex idx) {
  require_alpha(geom, alpha);
  const int n = geom.n();
  const int j = idx.j;
  const int k = idx.k;
  const double y = n + 1.0 - alpha;
  const double base = kernel_prefactor(n, alpha);
  const double numerator = 2.0 * j * k + n * (j + k - 1.0 + alpha);

  // u(m) = (α)_{m−1} / (y)_{m+1}, m ≥ 1
  auto u = [&](int m) { return pochhammer_quotient(alpha, y, m - 1) / ((y + m - 1.0) * (y + m)); };

  double correction = 0.0;
  if (j >= 1 && k >= 1) {
    correction = (alpha - 1.0) * numerator * u(j) * u(k);
  } else if (j >= 1 || k >= 1) {
    correction = numerator * u(std::max(j, k)) / y;
  } else {
    // numerator = n(α−1) cancels one pole, (α−1)² the other
    correction = n / (y * y);
  }
  correction *= base * (n + 1.0 - 2.0 * alpha);
  return fh_eigenvalue_closed(geom, alpha, idx) - correction;
}

double conformal_sobolev_constant(const SphereGeometry& geom, double d) {
  return std::exp(-2.0 * log_lambda_j(geom, d, 0));
}

double critical_exponent(const SphereGeometry& geom, double d) {
  require_order(geom, d);
  const double Q = geom.Q();
  return 2.0 * Q / (Q - d);
}

double subcritical_sobolev_constant(const SphereGeometry& geom, double d, double q) {
  require_order(geom, d);
  const double Q = geom.Q();
  if (!(q >= 2.0)) throw DomainError("subcritical Sobolev constant needs q >= 2");
  const double s = (Q - d) / 4.0;
  const double l = 2.0 * log_gamma_ratio(s + 1.0, (Q + d) / 4.0);
  return 8.0 * (q - 2.0) / (d * (Q - d)) * std::exp(l);
}

}  // namespace crs::spectrum
