#include "crsphere/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "crsphere/errors.hpp"

namespace crs::quadrature {

Rule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * k - 1.0) * z * p2 - (k - 1.0) * p3) / k;
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) <= 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    r.x[i] = -z;
    r.x[n - 1 - i] = z;
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  r.one_minus.resize(n);
  r.one_plus.resize(n);
  for (int i = 0; i < n; ++i) {
    r.one_minus[i] = 1.0 - r.x[i];
    r.one_plus[i] = 1.0 + r.x[i];
  }
  return r;
}

Rule tanh_sinh(int n, double t_max) {
  if (n < 3) throw DomainError("tanh_sinh: n must be >= 3");
  const int k_max = n / 2;
  const double h = t_max / k_max;
  Rule r;
  for (int k = -k_max; k <= k_max; ++k) {
    const double u = k * h;
    const double s = std::numbers::pi / 2.0 * std::sinh(u);
    const double c = std::cosh(s);
    const double w = h * std::numbers::pi / 2.0 * std::cosh(u) / (c * c);
    if (w == 0.0) continue;
    // 1 − tanh(s) = 2/(1 + e^{2s}), 1 + tanh(s) = 2/(1 + e^{−2s})
    r.x.push_back(std::tanh(s));
    r.w.push_back(w);
    r.one_minus.push_back(2.0 / (1.0 + std::exp(2.0 * s)));
    r.one_plus.push_back(2.0 / (1.0 + std::exp(-2.0 * s)));
  }
  return r;
}

Rule periodic_trapezoid(int n) {
  if (n < 1) throw DomainError("periodic_trapezoid: n must be >= 1");
  Rule r;
  for (int i = 0; i < n; ++i) {
    const double x = -1.0 + (2.0 * i + 1.0) / n;
    r.x.push_back(x);
    r.w.push_back(2.0 / n);
    r.one_minus.push_back(1.0 - x);
    r.one_plus.push_back(1.0 + x);
  }
  return r;
}

}  // namespace crs::quadrature
