#include <cmath>

#include "crsphere/certify.hpp"
#include "crsphere/errors.hpp"
#include "crsphere/spectrum.hpp"
#include "doctest.h"

using namespace crs;
using namespace crs::certify;

namespace {
CertGrid grid(int n, double d, double q, int jm = 30, int km = 30) {
  return CertGrid{SphereGeometry(n), d, q, jm, km};
}
}  // namespace

TEST_CASE("report classification") {
  CHECK(classify(0.0, 0.0) == Verdict::holds_equality);
  CHECK(classify(1e-3, 1e-2) == Verdict::holds_equality);
  CHECK(classify(0.1, 1e-2) == Verdict::holds_strict);
  CHECK(classify(-0.1, 1e-2) == Verdict::violated);
  const auto r = make_report("x", {{"a", 2.0}}, 1.0, 3.0, 0.5);
  CHECK(r.slack == 2.0);
  CHECK(r.param("a") == 2.0);
  CHECK_THROWS(r.param("b"));
  CHECK(to_string(Verdict::violated) == "violated");
}

TEST_CASE("spectral inequality sides") {
  const auto g = grid(1, 1.0, 2.5);
  auto s = spectral_ineq_sides(g, {0, 0});
  CHECK(s.lhs == 1.0);
  CHECK(s.rhs == 1.0);
  for (auto idx : {SpectralIndex(1, 0), SpectralIndex(0, 1)}) {
    s = spectral_ineq_sides(g, idx);
    CHECK(std::abs(s.lhs - 1.5) < 1e-12);
    CHECK(std::abs(s.rhs - 1.5) < 1e-12);
  }
  // mpmath, 40 digits
  s = spectral_ineq_sides(g, {2, 1});
  CHECK(s.lhs == doctest::Approx(2.75).epsilon(1e-13));
  CHECK(s.rhs == doctest::Approx(2.928571428571428571).epsilon(1e-13));
  s = spectral_ineq_sides(grid(2, 3.0, 2.5), {7, 4});
  CHECK(s.lhs == doctest::Approx(8.896277659290855771794).epsilon(1e-13));
  CHECK(s.rhs == doctest::Approx(74.41283544830455585604).epsilon(1e-13));
  // q = 3 lies above 2Q/(Q−d) = 8/3 for n = 1, d = 1
  CHECK_THROWS_AS(spectral_ineq_sides(grid(1, 1.0, 3.0), {2, 1}), DomainError);
}

TEST_CASE("grid certification equality locus") {
  for (const auto& g : {grid(1, 1.0, 2.5), grid(3, 5.0, 3.0, 50, 50),
                        grid(2, 3.0, spectrum::critical_exponent(SphereGeometry(2), 3.0) - 1e-4)}) {
    const auto reports = certify_spectral_ineq(g);
    CHECK(reports.size() == static_cast<std::size_t>((g.j_max + 1) * (g.k_max + 1)));
    for (const auto& r : reports) {
      const int j = static_cast<int>(r.param("j"));
      const int k = static_cast<int>(r.param("k"));
      const bool locus = (j + k == 0) || (j + k == 1);
      CHECK(r.verdict != Verdict::violated);
      CHECK((r.verdict == Verdict::holds_equality) == locus);
      if (!locus) CHECK(r.slack > g.strict_margin);
    }
  }
}

TEST_CASE("rhs scaling forces violations") {
  auto g = grid(1, 1.0, 2.5, 5, 5);
  g.rhs_scale = 0.99;
  const auto reports = certify_spectral_ineq(g);
  int violated = 0;
  for (const auto& r : reports) violated += r.verdict == Verdict::violated;
  CHECK(violated > 0);
}

TEST_CASE("derivative comparison") {
  const auto g = grid(1, 1.0, 2.5);
  const auto c = certify_derivative_comparison(g, {1, 0});
  CHECK(c.derivative.verdict == Verdict::holds_strict);
  // mpmath digamma route
  CHECK(c.derivative.lhs == doctest::Approx(1.013953005170925245766).epsilon(1e-13));
  CHECK(c.derivative.rhs == doctest::Approx(1.073009183012758451922).epsilon(1e-13));
  CHECK(c.termwise.verdict == Verdict::holds_strict);
  CHECK_THROWS_AS(certify_derivative_comparison(g, {0, 0}), DomainError);

  // series form agrees with the digamma form
  for (auto idx : {SpectralIndex(1, 0), SpectralIndex(3, 2), SpectralIndex(0, 5)}) {
    const auto cert = certify_derivative_comparison(g, idx);
    const auto series = derivative_series_sides(g, idx, 2000000);
    CHECK(series.lhs == doctest::Approx(cert.derivative.lhs).epsilon(1e-6));
    CHECK(series.rhs == doctest::Approx(cert.derivative.rhs).epsilon(1e-6));
  }
}

TEST_CASE("derivative comparison symmetry") {
  const auto g = grid(2, 2.0, 2.8);
  for (int j = 0; j < 6; ++j) {
    for (int k = 0; k < 6; ++k) {
      if (j + k == 0) continue;
      const auto a = certify_derivative_comparison(g, {j, k});
      const auto b = certify_derivative_comparison(g, {k, j});
      CHECK(a.derivative.verdict != Verdict::violated);
      CHECK(b.derivative.verdict != Verdict::violated);
      CHECK(a.numerator_fact.verdict == b.numerator_fact.verdict);
      CHECK(a.denominator_fact.verdict == b.denominator_fact.verdict);
    }
  }
}

TEST_CASE("kernel comparison") {
  SphereGeometry g(1);
  CHECK(certify_kernel_comparison(g, 1.0, 3.0, {0, 0}).verdict == Verdict::holds_equality);
  CHECK(certify_kernel_comparison(g, 1.0, 3.0, {1, 1}).verdict == Verdict::holds_strict);
  const auto near = certify_kernel_comparison(g, 1.0, 1.0 + 1e-6, {1, 1});
  CHECK(near.slack > 0.0);
  REQUIRE(near.verdict == Verdict::holds_strict);
  CHECK(near.notes.size() == 1);
  CHECK_THROWS_AS(certify_kernel_comparison(g, 2.0, 1.0, {0, 0}), DomainError);
  double prev = 0.0;
  for (double l2 = 1.2; l2 < 3.9; l2 += 0.3) {
    const double s = certify_kernel_comparison(g, 1.0, l2, {2, 1}).slack;
    CHECK(s > prev);
    prev = s;
  }
}

TEST_CASE("limit d to Q") {
  SphereGeometry g(1);
  const std::vector<double> ds{4.0 - 1e-2, 4.0 - 1e-4, 4.0 - 1e-6};
  const auto study = certify_limit_dQ(g, 4.0, 2, ds);
  CHECK(study.monotone);
  CHECK(limit_target(g, 4.0, 2) == doctest::Approx(6.0));
  // mpmath values of the scaled eigenvalue
  CHECK(study.steps[0].param("scaled") == doctest::Approx(5.987543672147950924693).epsilon(1e-12));
  CHECK(study.steps[2].param("scaled") == doctest::Approx(5.999998750000437499922).epsilon(1e-9));
  CHECK(study.steps[2].lhs < 1e-4);
  const auto zero = certify_limit_dQ(g, 3.0, 0, ds);
  CHECK(zero.monotone);
  CHECK(zero.steps[2].param("target") == 0.0);
  const std::vector<double> close{4.0 - 1e-9};
  CHECK(certify_limit_dQ(g, 3.0, 1, close).steps[0].notes.size() == 2);
  const std::vector<double> bad{3.0, 2.0};
  CHECK_THROWS_AS(certify_limit_dQ(g, 3.0, 1, bad), DomainError);
}

TEST_CASE("duality identity") {
  SphereGeometry g(1);
  const auto r = certify_duality_identity(g, 2.0, {1, 0});
  CHECK(r.verdict == Verdict::holds_equality);
  CHECK(r.param("value") == doctest::Approx(0.25));
  CHECK(certify_duality_identity(g, 1.0, {0, 0}).slack == 0.0);
  for (int n = 1; n <= 4; ++n) {
    SphereGeometry gn(n);
    for (double d : {1.0, gn.Q() / 2.0, gn.Q() - 0.5}) {
      for (int j : {0, 3, 57, 100}) {
        for (int k : {1, 99}) {
          CHECK(certify_duality_identity(gn, d, {j, k}).verdict == Verdict::holds_equality);
        }
      }
    }
  }
}

TEST_CASE("chebyshev points") {
  const auto x = chebyshev_points(2.0, 4.0, 5);
  REQUIRE(x.size() == 5);
  CHECK(x.front() > 2.0);
  CHECK(x.back() < 4.0);
  for (std::size_t i = 1; i < x.size(); ++i) CHECK(x[i] > x[i - 1]);
  CHECK(x[2] == doctest::Approx(3.0));
}
