#include "crsphere/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "crsphere/errors.hpp"
#include "crsphere/parallel.hpp"
#include "crsphere/spectrum.hpp"

namespace crs::certify {

using special::digamma_diff;
using special::log_gamma_ratio;

namespace {

using Params = std::vector<std::pair<std::string, double>>;

Params grid_params(const CertGrid& g, SpectralIndex idx) {
  return {{"n", g.geom.n()}, {"d", g.d}, {"q", g.q}, {"j", idx.j}, {"k", idx.k}};
}

double rel_tol(double base, double rhs) { return base * std::max(1.0, std::abs(rhs)); }

void flag_margin(IneqReport& r, double strict_margin) {
  if (r.verdict == Verdict::holds_strict && r.slack < strict_margin) {
    r.notes.emplace_back("below_strict_margin");
  }
}

// log of Γ(j+x)Γ(k+x)/Γ(x)²
double log_pair_ratio(double x, SpectralIndex idx) {
  return log_gamma_ratio(idx.j + x, x) + log_gamma_ratio(idx.k + x, x);
}

// log of 8(q−2)/(d(Q−d)) Γ²((Q−d)/4+1)/Γ²((Q+d)/4) · λ_0(d)²
double log_bracket_prefactor(double Q, double d, double q) {
  const double s = (Q - d) / 4.0;
  const double t = (Q + d) / 4.0;
  return std::log(8.0 * (q - 2.0) / (d * (Q - d))) + 2.0 * log_gamma_ratio(s + 1.0, t) +
         2.0 * log_gamma_ratio(t, s);
}

}  // namespace

void CertGrid::validate() const {
  const double Q = geom.Q();
  if (!(d > 0.0 && d < Q)) throw DomainError("CertGrid: d must lie in (0, Q)");
  const double q_crit = spectrum::critical_exponent(geom, d);
  if (!(q > 2.0 && q < q_crit)) throw DomainError("CertGrid: q must lie in (2, 2Q/(Q-d))");
  if (j_max < 1 || k_max < 1) throw DomainError("CertGrid: j_max and k_max must be >= 1");
  if (!(equality_tol > 0.0) || !(strict_margin > 0.0)) {
    throw DomainError("CertGrid: tolerances must be positive");
  }
  if (!(rhs_scale > 0.0)) throw DomainError("CertGrid: rhs_scale must be positive");
}

SpectralSides spectral_ineq_sides(const CertGrid& grid, SpectralIndex idx) {
  grid.validate();
  const double Q = grid.geom.Q();
  const double a = Q / (2.0 * grid.q);  // (Q − d₁)/4
  const double b = Q / 2.0 - a;         // (Q + d₁)/4 = Q/2q'
  const double lhs = std::exp(log_pair_ratio(b, idx) - log_pair_ratio(a, idx));

  const double s = (Q - grid.d) / 4.0;
  const double t = (Q + grid.d) / 4.0;
  const double bracket = std::expm1(log_pair_ratio(t, idx) - log_pair_ratio(s, idx));
  const double rhs = 1.0 + std::exp(log_bracket_prefactor(Q, grid.d, grid.q)) * bracket;
  return {lhs, grid.rhs_scale * rhs};
}

std::vector<IneqReport> certify_spectral_ineq(const CertGrid& grid) {
  grid.validate();
  const auto cols = static_cast<std::size_t>(grid.k_max + 1);
  const auto cells = static_cast<std::size_t>(grid.j_max + 1) * cols;
  std::vector<IneqReport> out(cells);
  parallel::for_each_index(cells, [&](std::size_t i) {
    const SpectralIndex idx(static_cast<int>(i / cols), static_cast<int>(i % cols));
    const auto [lhs, rhs] = spectral_ineq_sides(grid, idx);
    out[i] = make_report("spectral_ineq", grid_params(grid, idx), lhs, rhs,
                         rel_tol(grid.equality_tol, rhs));
    flag_margin(out[i], grid.strict_margin);
  });
  return out;
}

DerivativeCertificate certify_derivative_comparison(const CertGrid& grid, SpectralIndex idx,
                                                    const special::AccuracySpec& acc) {
  grid.validate();
  if (idx.j + idx.k < 1) throw DomainError("derivative comparison needs j + k >= 1");
  const double Q = grid.geom.Q();
  const double d = grid.d;
  const double q = grid.q;
  const double qc = grid.q_conj();
  const double a = Q / (2.0 * q);
  const double b = Q / (2.0 * qc);
  const double s = (Q - d) / 4.0;
  const double t = (Q + d) / 4.0;
  const Params params = grid_params(grid, idx);

  DerivativeCertificate cert;
  {
    const auto [lhs, rhs_unscaled] = spectral_ineq_sides(CertGrid{grid.geom, d, q, grid.j_max,
                                                                  grid.k_max, grid.equality_tol,
                                                                  grid.strict_margin, 1.0},
                                                         idx);
    (void)rhs_unscaled;
    const double d_lhs = lhs * digamma_diff(idx.k + b, idx.k + a, acc);
    const double log_b = std::log(spectrum::subcritical_sobolev_constant(grid.geom, d, q));
    const double lam = log_gamma_ratio(idx.j + t, idx.j + s) + log_gamma_ratio(idx.k + t, idx.k + s);
    const double d_rhs = grid.rhs_scale * std::exp(log_b + lam) * digamma_diff(idx.k + t, idx.k + s, acc);
    cert.derivative = make_report("derivative_comparison", params, d_lhs, d_rhs,
                                  rel_tol(grid.equality_tol, d_rhs));
    flag_margin(cert.derivative, grid.strict_margin);
  }
  {
    const double lhs = std::exp(log_pair_ratio(b, idx));
    const double rhs = std::exp(log_pair_ratio(t, idx));
    cert.numerator_fact = make_report("gamma_numerator_fact", params, lhs, rhs,
                                      rel_tol(grid.equality_tol, rhs));
  }
  {
    const double lhs = std::exp(log_pair_ratio(s, idx)) / s;
    const double rhs = std::exp(log_pair_ratio(a, idx)) / a;
    cert.denominator_fact = make_report("gamma_denominator_fact", params, lhs, rhs,
                                        rel_tol(grid.equality_tol, rhs));
  }
  {
    const double x = idx.k;
    const double base = x * x + Q / 2.0 * x;
    const double lhs = (q - 2.0) / (base + Q * Q / (4.0 * q * qc));
    const double rhs = (q - 2.0) / (base + s * t);
    auto params_l = params;
    params_l.emplace_back("l", 0.0);
    cert.termwise = make_report("termwise_series_bound", std::move(params_l), lhs, rhs,
                                rel_tol(grid.equality_tol, rhs));
  }
  return cert;
}

SpectralSides derivative_series_sides(const CertGrid& grid, SpectralIndex idx, long terms) {
  grid.validate();
  const double Q = grid.geom.Q();
  const double d = grid.d;
  const double q = grid.q;
  const double qc = grid.q_conj();
  const double c_left = Q * Q / (4.0 * q * qc);
  const double c_right = (Q - d) * (Q + d) / 16.0;
  double sum_left = 0.0;
  double sum_right = 0.0;
  for (long l = terms - 1; l >= 0; --l) {
    const double x = static_cast<double>(l + idx.k);
    sum_left += (q - 2.0) / (x * x + Q / 2.0 * x + c_left);
    sum_right += (q - 2.0) / (x * x + Q / 2.0 * x + c_right);
  }
  const auto sides = spectral_ineq_sides(CertGrid{grid.geom, d, q, grid.j_max, grid.k_max,
                                                  grid.equality_tol, grid.strict_margin, 1.0},
                                         idx);
  const double s = (Q - d) / 4.0;
  const double t = (Q + d) / 4.0;
  const double ratio = std::exp(log_pair_ratio(t, idx) - log_pair_ratio(s, idx));
  return {sides.lhs * Q / (2.0 * q) * sum_left,
          grid.rhs_scale * (Q - d) / 4.0 * ratio * sum_right};
}

IneqReport certify_kernel_comparison(const SphereGeometry& geom, double lambda1, double lambda2,
                                     SpectralIndex idx, double equality_tol, double near_margin) {
  if (!(lambda1 > 0.0 && lambda1 < lambda2 && lambda2 < geom.Q())) {
    throw DomainError("kernel comparison needs 0 < lambda1 < lambda2 < Q");
  }
  const double lhs = spectrum::hls_gamma(geom, lambda1, idx);
  const double rhs = spectrum::hls_gamma(geom, lambda2, idx);
  IneqReport r = make_report(
      "kernel_comparison",
      {{"n", geom.n()}, {"lambda1", lambda1}, {"lambda2", lambda2}, {"j", idx.j}, {"k", idx.k}},
      lhs, rhs, equality_tol * rhs);
  if (r.verdict == Verdict::holds_strict && r.slack < near_margin) {
    r.notes.emplace_back("near_equality");
  }
  return r;
}

double limit_scaled_eigenvalue(const SphereGeometry& geom, double q, int j, double d) {
  const double Q = geom.Q();
  if (!(d > 0.0 && d < Q)) throw DomainError("limit: d must lie in (0, Q)");
  if (!(q >= 2.0)) throw DomainError("limit: q must be >= 2");
  if (j < 0) throw DomainError("limit: j must be >= 0");
  if (q == 2.0) return 0.0;
  const double log_b = std::log(spectrum::subcritical_sobolev_constant(geom, d, q));
  return std::exp(log_b + spectrum::log_lambda_j(geom, d, j) + spectrum::log_lambda_j(geom, d, 0));
}

double limit_target(const SphereGeometry& geom, double q, int j) {
  return (q - 2.0) * spectrum::conditional_lambda(geom, j) /
         std::exp(special::log_factorial(geom.n() + 1));
}

LimitStudy certify_limit_dQ(const SphereGeometry& geom, double q, int j,
                            std::span<const double> d_sequence) {
  const double Q = geom.Q();
  for (std::size_t i = 0; i < d_sequence.size(); ++i) {
    if (!(d_sequence[i] > 0.0 && d_sequence[i] < Q)) throw DomainError("limit: d must lie in (0, Q)");
    if (i > 0 && !(d_sequence[i] > d_sequence[i - 1])) {
      throw DomainError("limit: d_sequence must be increasing");
    }
  }
  const double target = limit_target(geom, q, j);
  LimitStudy study;
  double previous = 0.0;
  for (std::size_t i = 0; i < d_sequence.size(); ++i) {
    const double d = d_sequence[i];
    const double scaled = limit_scaled_eigenvalue(geom, q, j, d);
    const double distance =
        target > 0.0 ? std::abs(scaled - target) / target : std::abs(scaled - target);
    const double rhs = i == 0 ? distance : previous;
    IneqReport r = make_report("limit_dQ",
                               {{"n", geom.n()}, {"q", q}, {"j", j}, {"d", d},
                                {"scaled", scaled}, {"target", target}},
                               distance, rhs, 0.0);
    if (i == 0) {
      r.notes.emplace_back("first_step");
    } else if (!(distance < previous)) {
      study.monotone = false;
      r.notes.emplace_back("not_decreasing");
    }
    if (d > Q - 1e-8) r.notes.emplace_back("cancellation_warning");
    study.steps.push_back(std::move(r));
    previous = distance;
  }
  return study;
}

IneqReport certify_duality_identity(const SphereGeometry& geom, double d, SpectralIndex idx,
                                    double rel_tol_) {
  const double Q = geom.Q();
  if (!(d > 0.0 && d < Q)) throw DomainError("duality: d must lie in (0, Q)");
  const double log_lhs = std::log(spectrum::hls_gamma(geom, Q - d, idx)) +
                         spectrum::log_lambda_j(geom, d, idx.j) +
                         spectrum::log_lambda_j(geom, d, idx.k);
  const double value = std::exp(log_lhs);
  const double target = std::exp(2.0 * spectrum::log_lambda_j(geom, d, 0));
  // Identity check as |value − target| ≤ 0: any separation beyond the
  // tolerance is a violation, whichever side it falls on.
  return make_report("duality_identity",
                     {{"n", geom.n()}, {"d", d}, {"j", idx.j}, {"k", idx.k},
                      {"value", value}, {"target", target}},
                     std::abs(value - target), 0.0, rel_tol_ * target);
}

std::vector<double> chebyshev_points(double a, double b, int count) {
  if (count < 1 || !(a < b)) throw DomainError("chebyshev_points: need count >= 1 and a < b");
  std::vector<double> x(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double theta = (2.0 * (count - i) - 1.0) * std::numbers::pi / (2.0 * count);
    x[static_cast<std::size_t>(i)] = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(theta);
  }
  return x;
}

double min_strict_slack(std::span<const IneqReport> reports) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : reports) {
    if (r.verdict != Verdict::holds_equality) m = std::min(m, r.slack);
  }
  return m;
}

}  // namespace crs::certify
