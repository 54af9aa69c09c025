#pragma once

#include <vector>

namespace crs::quadrature {

/// Nodes on [-1, 1] with weights. `one_minus` and `one_plus` hold 1 − x and
/// 1 + x computed without cancellation, which matters for rules that cluster
/// nodes at the endpoints.
struct Rule {
  std::vector<double> x;
  std::vector<double> w;
  std::vector<double> one_minus;
  std::vector<double> one_plus;

  std::size_t size() const noexcept { return x.size(); }
};

/// n-point Gauss–Legendre rule (Newton iteration on the Legendre recurrence).
Rule gauss_legendre(int n);

/// Tanh–sinh (double exponential) rule with about n points. `t_max` is the
/// half-width of the truncated step range in the sinh variable.
Rule tanh_sinh(int n, double t_max = 3.5);

/// Midpoint-trapezoid rule with n equispaced nodes on [-1, 1]; exact for
/// trigonometric polynomials of degree < n after scaling to a period.
Rule periodic_trapezoid(int n);

}  // namespace crs::quadrature
