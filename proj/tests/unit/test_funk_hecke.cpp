#include <cmath>
#include <numbers>

#include "crsphere/errors.hpp"
#include "crsphere/funk_hecke.hpp"
#include "crsphere/quadrature.hpp"
#include "crsphere/spectrum.hpp"
#include "doctest.h"

using namespace crs;
using namespace crs::funk_hecke;

namespace {
double rel(std::complex<double> a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("quadrature rules integrate what they should") {
  const auto gl = quadrature::gauss_legendre(10);
  double s = 0.0;
  for (std::size_t i = 0; i < gl.x.size(); ++i) s += gl.w[i] * std::pow(gl.x[i], 18);
  CHECK(s == doctest::Approx(2.0 / 19.0).epsilon(1e-14));

  // tanh-sinh handles endpoint singularities: ∫(1−t)^{-0.6} = 2^{0.4}/0.4
  const auto ts = quadrature::tanh_sinh(200);
  double sing = 0.0;
  for (std::size_t i = 0; i < ts.x.size(); ++i) sing += ts.w[i] * std::pow(ts.one_minus[i], -0.6);
  // truncation at t_max = 3.5 drops about (2.6e-23)^{0.4}/0.4 ≈ 2e-9 of the mass
  CHECK(sing == doctest::Approx(std::pow(2.0, 0.4) / 0.4).epsilon(1e-8));

  const auto tr = quadrature::periodic_trapezoid(16);
  double c = 0.0;
  for (std::size_t i = 0; i < tr.x.size(); ++i) {
    const double phi = std::numbers::pi * tr.x[i];
    c += std::numbers::pi * tr.w[i] * std::cos(3 * phi) * std::cos(3 * phi);
  }
  CHECK(c == doctest::Approx(std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("constant kernel projects onto constants") {
  for (int n = 1; n <= 3; ++n) {
    SphereGeometry g(n);
    CHECK(std::abs(fh_eigenvalue_quadrature(g, ConstantKernel{}, {0, 0}).value - 1.0) < 1e-10);
    for (int j = 0; j <= 4; ++j) {
      for (int k = 0; k <= 4; ++k) {
        if (j + k == 0) continue;
        CHECK(std::abs(fh_eigenvalue_quadrature(g, ConstantKernel{}, {j, k}).value) < 1e-10);
      }
    }
  }
}

TEST_CASE("power kernel matches the closed form") {
  SphereGeometry g(1);
  const auto r = fh_eigenvalue_quadrature(g, PowerKernel{0.6}, {2, 1});
  CHECK(rel(r.value, spectrum::fh_eigenvalue_closed(g, 0.6, {2, 1})) < 1e-8);
  CHECK(r.converged);
  CHECK(r.double_exponential);
  const auto neg = fh_eigenvalue_quadrature(SphereGeometry(2), PowerKernel{-0.4}, {1, 2});
  CHECK(rel(neg.value, spectrum::fh_eigenvalue_closed(SphereGeometry(2), -0.4, {1, 2})) < 1e-8);
}

TEST_CASE("weighted kernel matches the closed form") {
  for (auto [n, a, j, k] : {std::tuple{2, 0.6, 1, 1}, std::tuple{1, 0.5, 1, 1}, std::tuple{3, 1.0, 2, 0},
                            std::tuple{2, 1.2, 0, 0}, std::tuple{2, 1.0, 0, 0}}) {
    SphereGeometry g(n);
    const auto r = fh_eigenvalue_quadrature(g, WeightedPowerKernel{a}, {j, k});
    CHECK(rel(r.value, spectrum::fh_eigenvalue_weighted(g, a, {j, k})) < 1e-8);
  }
}

TEST_CASE("custom kernel equals the matching power kernel") {
  SphereGeometry g(2);
  CustomKernel custom{[](std::complex<double> z) { return std::pow(std::abs(1.0 - z), -1.4); }};
  const auto a = fh_eigenvalue_quadrature(g, custom, {1, 2});
  const auto b = fh_eigenvalue_quadrature(g, PowerKernel{0.7}, {1, 2});
  CHECK(std::abs(a.value - b.value) < 1e-12 * std::abs(b.value));
}

TEST_CASE("quadrature spec validation") {
  QuadratureSpec q{4, 512};
  CHECK_THROWS_AS(q.validate(), DomainError);
  CHECK_THROWS_AS(fh_eigenvalue_quadrature(SphereGeometry(1), PowerKernel{1.0}, {0, 0}), DomainError);
  CHECK(describe(PowerKernel{0.5}).find("0.5") != std::string::npos);
}
