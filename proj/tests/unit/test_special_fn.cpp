#include <cmath>
#include <numbers>

#include "crsphere/errors.hpp"
#include "crsphere/quadrature.hpp"
#include "crsphere/special_fn.hpp"
#include "doctest.h"

using namespace crs;
using namespace crs::special;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("log_gamma at simple points") {
  CHECK(log_gamma(1.0) == 0.0);
  CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(rel(log_gamma(0.5), 0.5 * std::log(std::numbers::pi)) < 1e-14);
  // mpmath, 30 digits
  CHECK(rel(log_gamma(20.25), 40.08411059791734898397077) < 1e-14);
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
}

TEST_CASE("log_gamma relative accuracy over a wide range") {
  // ln Γ(x+1) − ln Γ(x) = ln x must hold to the stated accuracy
  for (double x = 0.013; x < 1e6; x *= 1.37) {
    const double lhs = log_gamma(x + 1.0) - log_gamma(x);
    CHECK(std::abs(lhs - std::log(x)) <= 1e-13 * std::max(1.0, std::abs(log_gamma(x + 1.0))));
  }
}

TEST_CASE("gamma_ratio") {
  CHECK(gamma_ratio(3.7, 3.7) == 1.0);
  CHECK(rel(gamma_ratio(3.5, 2.5), 2.5) < 1e-15);
  CHECK(rel(gamma_ratio(103.25, 3.25), 1.200398048309965924650918e162) < 1e-12);
  CHECK(rel(gamma_ratio(10001.0, 10000.0), 10000.0) < 1e-13);
  CHECK(rel(gamma_ratio(1e6 + 0.5, 1e6), 999.9998750000078125048828) < 1e-13);
  CHECK_THROWS_AS(gamma_ratio(500.0, 1.0), RangeError);
  CHECK_THROWS_AS(gamma_ratio(1.0, 0.0), DomainError);
}

TEST_CASE("log_gamma_ratio is antisymmetric") {
  for (double a : {0.1, 1.7, 25.0, 3e4}) {
    for (double b : {0.3, 2.2, 40.5, 7e5}) {
      CHECK(log_gamma_ratio(a, b) == doctest::Approx(-log_gamma_ratio(b, a)).epsilon(1e-13));
    }
  }
}

TEST_CASE("pochhammer and factorials") {
  CHECK(pochhammer(0.5, 0) == 1.0);
  CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5));
  CHECK(pochhammer(-0.5, 2) == doctest::Approx(-0.5 * 0.5));
  CHECK(std::exp(log_factorial(5)) == doctest::Approx(120.0));
  CHECK(log_factorial(0) == 0.0);
}

TEST_CASE("digamma_diff") {
  CHECK(digamma_diff(1.3, 1.3) == 0.0);
  CHECK(std::abs(digamma_diff(2.0, 1.0) - 1.0) <= 1e-15);
  CHECK(std::abs(digamma_diff(1.5, 1.0) - (2.0 - 2.0 * std::log(2.0))) <= 1e-15);
  CHECK(std::abs(digamma_diff(7.3, 0.2) - 7.206860232230174076212206) <= 1e-14);
  CHECK(std::abs(digamma_diff(1000.5, 1000.0) - 0.0005001249999843750078124917) <= 1e-15);
  CHECK(digamma_diff(1.0, 1.5) == doctest::Approx(-digamma_diff(1.5, 1.0)));
}

TEST_CASE("digamma_diff honours the term budget") {
  AccuracySpec acc;
  acc.max_terms = 1;
  acc.series_tolerance = 1e-300;
  CHECK_THROWS_AS(digamma_diff(3.0, 0.01, acc), ConvergenceError);
  AccuracySpec bad;
  bad.series_tolerance = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("digamma_diff recurrence property") {
  // ψ(a+1) − ψ(b) = ψ(a) − ψ(b) + 1/a
  for (double a : {0.05, 0.7, 3.3, 80.0}) {
    for (double b : {0.2, 1.9, 12.0}) {
      CHECK(std::abs(digamma_diff(a + 1.0, b) - digamma_diff(a, b) - 1.0 / a) < 1e-13);
    }
  }
}

TEST_CASE("jacobi_poly low degrees") {
  CHECK(jacobi_poly(0, 0.3, 1.2, 0.4) == 1.0);
  for (double t : {-0.9, 0.0, 0.35, 1.0}) {
    const double a = 0.7;
    const double b = 2.0;
    CHECK(jacobi_poly(1, a, b, t) == doctest::Approx((a + 1.0) + (a + b + 2.0) * (t - 1.0) / 2.0));
  }
  // P_m^{(0,0)} is Legendre: P_2(t) = (3t² − 1)/2
  CHECK(jacobi_poly(2, 0.0, 0.0, 0.3) == doctest::Approx((3 * 0.09 - 1) / 2));
  CHECK_THROWS_AS(jacobi_poly(-1, 0.0, 0.0, 0.1), DomainError);
  CHECK_THROWS_AS(jacobi_poly(2, -1.0, 0.0, 0.1), DomainError);
}

TEST_CASE("jacobi_poly orthogonality under Gauss-Legendre") {
  // integer weights make the integrand a polynomial of degree ≤ 2 + 3 + 5
  const auto rule = quadrature::gauss_legendre(16);
  for (auto [a, b] : {std::pair{1.0, 0.0}, std::pair{2.0, 3.0}, std::pair{0.0, 1.0}}) {
    double s = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double t = rule.x[i];
      const double w = rule.w[i] * std::pow(1 - t, a) * std::pow(1 + t, b);
      s += w * jacobi_poly(2, a, b, t) * jacobi_poly(3, a, b, t);
      norm += w * jacobi_poly(3, a, b, t) * jacobi_poly(3, a, b, t);
    }
    CHECK(std::abs(s) < 1e-12 * norm);
  }
}
