#include "crsphere/special_fn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "crsphere/errors.hpp"

namespace crs::special {
namespace {

// Below this both arguments are shifted up before the Stirling series is used.
constexpr double kStirlingMin = 10.0;

// B_{2k} / (2k (2k-1)), k = 1..8
constexpr std::array<double, 8> kStirlingCoeff = {
    1.0 / 12.0,       -1.0 / 360.0, 1.0 / 1260.0,        -1.0 / 1680.0,
    1.0 / 1188.0,     -691.0 / 360360.0, 1.0 / 156.0,    -3617.0 / 122400.0};

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be finite and > 0, got " +
                      std::to_string(x));
  }
}

// Σ_k c_k (A^{1-2k} − B^{1-2k})
double stirling_tail_diff(double A, double B) {
  const double ia2 = 1.0 / (A * A);
  const double ib2 = 1.0 / (B * B);
  double pa = 1.0 / A;
  double pb = 1.0 / B;
  double s = 0.0;
  for (double c : kStirlingCoeff) {
    s += c * (pa - pb);
    pa *= ia2;
    pb *= ib2;
  }
  return s;
}

}  // namespace

void AccuracySpec::validate() const {
  if (!(series_tolerance > 0.0)) throw DomainError("AccuracySpec: series_tolerance must be > 0");
  if (max_terms < 1) throw DomainError("AccuracySpec: max_terms must be >= 1");
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double log_gamma_ratio(double a, double b) {
  require_positive(a, "log_gamma_ratio");
  require_positive(b, "log_gamma_ratio");
  if (a == b) return 0.0;

  // Γ(a)/Γ(b) = Γ(a+N)/Γ(b+N) · Π_{i<N} (b+i)/(a+i)
  double acc = 0.0;
  const double lo = std::min(a, b);
  if (lo < kStirlingMin) {
    const int shift = static_cast<int>(std::ceil(kStirlingMin - lo));
    for (int i = 0; i < shift; ++i) acc += std::log1p((b - a) / (a + i));
    a += shift;
    b += shift;
  }
  const double delta = a - b;
  // (a−½)ln a − (b−½)ln b − (a−b), rewritten so that close arguments do not cancel
  const double main = delta * std::log(b) + (a - 0.5) * std::log1p(delta / b) - delta;
  return acc + main + stirling_tail_diff(a, b);
}

double gamma_ratio(double a, double b) {
  const double l = log_gamma_ratio(a, b);
  if (l > std::log(std::numeric_limits<double>::max())) {
    throw RangeError("gamma_ratio: result overflows");
  }
  if (l < std::log(std::numeric_limits<double>::min())) {
    throw RangeError("gamma_ratio: result underflows");
  }
  return std::exp(l);
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  return log_gamma(n + 1.0);
}

double pochhammer(double x, int m) {
  if (m < 0) throw DomainError("pochhammer: negative order");
  if (!(x > -1.0)) throw DomainError("pochhammer: argument must be > -1");
  if (m == 0) return 1.0;
  if (x == 0.0) return 0.0;
  if (x > 0.0) return std::exp(log_gamma_ratio(x + m, x));
  return x * std::exp(log_gamma_ratio(x + m, x + 1.0));
}

double digamma_diff(double a, double b, const AccuracySpec& acc) {
  require_positive(a, "digamma_diff");
  require_positive(b, "digamma_diff");
  acc.validate();
  if (a == b) return 0.0;

  const double diff = a - b;
  // g(x) = 1/(b+x) − 1/(a+x); g^{(m)}(x) = (−1)^m m! [(b+x)^{−m−1} − (a+x)^{−m−1}]
  auto deriv = [&](int m, double x) {
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= i;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign * fact * (std::pow(b + x, -m - 1) - std::pow(a + x, -m - 1));
  };

  double partial = 0.0;
  std::size_t l = 0;
  for (;; ++l) {
    const double x = static_cast<double>(l);
    // next Euler–Maclaurin term (B_8/8!) g^{(7)} bounds the remainder
    const double remainder = 2.0 * std::abs(deriv(7, x)) / 1209600.0;
    if (remainder <= 0.5 * acc.series_tolerance) break;
    if (l >= acc.max_terms) {
      throw ConvergenceError("digamma_diff: max_terms reached before tolerance");
    }
    partial += diff / ((a + x) * (b + x));
  }

  const double x = static_cast<double>(l);
  const double g = diff / ((a + x) * (b + x));
  const double tail = std::log1p(diff / (b + x)) + 0.5 * g - deriv(1, x) / 12.0 +
                      deriv(3, x) / 720.0 - deriv(5, x) / 30240.0;
  return partial + tail;
}

double jacobi_poly(int m, double alpha, double beta, double t) {
  if (m < 0) throw DomainError("jacobi_poly: degree must be >= 0");
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("jacobi_poly: alpha and beta must be > -1");
  }
  if (!(std::abs(t) <= 1.0)) throw DomainError("jacobi_poly: t must lie in [-1, 1]");

  if (m == 0) return 1.0;
  const double ab = alpha + beta;
  double prev = 1.0;
  double cur = (alpha + 1.0) + (ab + 2.0) * (t - 1.0) / 2.0;
  for (int k = 2; k <= m; ++k) {
    const double s = 2.0 * k + ab;
    const double a1 = 2.0 * k * (k + ab) * (s - 2.0);
    const double a2 = (s - 1.0) * (alpha * alpha - beta * beta);
    const double a3 = (s - 1.0) * s * (s - 2.0);
    const double a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s;
    const double next = ((a2 + a3 * t) * cur - a4 * prev) / a1;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace crs::special
