#pragma once

#include <cstddef>

// Real special functions used by the spectral formulas. Gamma quotients are
// always formed in the log domain so that indices in the thousands stay
// representable.

namespace crs::special {

struct AccuracySpec {
  double series_tolerance = 1e-15;  // absolute truncation target
  std::size_t max_terms = 100000;

  void validate() const;
};

/// ln Γ(x) for x > 0.
double log_gamma(double x);

/// ln(Γ(a)/Γ(b)) for a, b > 0, accurate when a and b are both large and close.
double log_gamma_ratio(double a, double b);

/// Γ(a)/Γ(b). Throws RangeError if the quotient over- or underflows.
double gamma_ratio(double a, double b);

/// ln n!
double log_factorial(int n);

/// Rising factorial (x)_m = x (x+1) ... (x+m-1), defined here for x > -1.
double pochhammer(double x, int m);

/// ψ(a) − ψ(b) from Σ_l [1/(b+l) − 1/(a+l)] with an Euler–Maclaurin tail.
double digamma_diff(double a, double b, const AccuracySpec& acc = {});

/// Jacobi polynomial P_m^{(alpha,beta)}(t), standard normalization
/// P_m(1) = binom(m + alpha, m).
double jacobi_poly(int m, double alpha, double beta, double t);

}  // namespace crs::special
