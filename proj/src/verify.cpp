#include "crsphere/verify.hpp"

#include <cmath>
#include <string>

#include "crsphere/errors.hpp"
#include "crsphere/special_fn.hpp"
#include "crsphere/spectrum.hpp"

namespace crs::verify {

using sphere::PointView;

namespace {

using Params = std::vector<std::pair<std::string, double>>;

double floor_tol(double rhs) { return 1e-12 * std::max(1.0, std::abs(rhs)); }

double norm_of(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

void add_sampling(Params& p, const SampleSpec& spec) {
  p.emplace_back("samples", static_cast<double>(spec.count));
  p.emplace_back("seed", static_cast<double>(spec.seed));
}

IneqReport mc_report(std::string id, Params params, double lhs, double rhs, double sigma) {
  params.emplace_back("sigma", sigma);
  IneqReport r = make_report(std::move(id), std::move(params), lhs, rhs,
                             kSigmas * sigma + floor_tol(rhs));
  r.notes.emplace_back("monte_carlo_3sigma");
  return r;
}

// ‖f‖_q² with the delta-method error of the square
std::pair<double, double> lq_squared(const SphereGeometry& geom, const HarmonicExpansion& f,
                                     double q, const SampleSpec& spec,
                                     const sphere::PointSource* src = nullptr) {
  const auto est = sphere::lq_norm_mc(geom, f.as_function(), q, spec, src);
  return {est.value * est.value, 2.0 * est.value * est.std_error};
}

void require_order(const SphereGeometry& geom, double d) {
  if (!(d > 0.0 && d < geom.Q())) throw DomainError("order d must lie in (0, Q)");
}

}  // namespace

namespace {
double extremal_power(const std::variant<HlsExponent, SobolevExponent>& kind, double Q) {
  if (const auto* h = std::get_if<HlsExponent>(&kind)) return -(2.0 * Q - h->lambda) / 2.0;
  return (std::get<SobolevExponent>(kind).d - Q) / 2.0;
}
}  // namespace

double ExtremalSpec::exponent(const SphereGeometry& geom) const {
  return extremal_power(kind, geom.Q());
}

void ExtremalSpec::validate(const SphereGeometry& geom) const {
  if (static_cast<int>(zeta.size()) != geom.axes()) {
    throw DomainError("extremal: zeta must have n+1 components");
  }
  if (!(norm_of(zeta) < 1.0)) throw DomainError("extremal: |zeta| must be < 1");
  const double p = std::holds_alternative<HlsExponent>(kind) ? std::get<HlsExponent>(kind).lambda
                                                             : std::get<SobolevExponent>(kind).d;
  if (!(p > 0.0 && p < geom.Q())) throw DomainError("extremal: parameter must lie in (0, Q)");
}

cplx ExtremalSpec::operator()(PointView xi) const {
  // ζ̄·ξ = Σ conj(ζ_i) ξ_i
  cplx s = 0.0;
  for (std::size_t i = 0; i < zeta.size(); ++i) s += std::conj(zeta[i]) * xi[i];
  const double e = extremal_power(kind, 2.0 * static_cast<double>(zeta.size()));
  return std::pow(std::abs(1.0 - s), e);
}

double hls_spectral_form(const SphereGeometry& geom, double lambda, const HarmonicExpansion& f) {
  sphere::validate(geom, f, true);
  return sphere::quadratic_form(geom, f, HLSKernel{lambda});
}

IneqReport verify_hls_spectral(const SphereGeometry& geom, double lambda,
                               const HarmonicExpansion& f) {
  const double c = spectrum::hls_constant(geom, lambda);
  const double lhs = hls_spectral_form(geom, lambda, f) / c;
  const double rhs = sphere::l2_norm_sq_exact(geom, f);
  return make_report("hls-spectral", {{"n", geom.n()}, {"lambda", lambda}}, lhs, rhs,
                     floor_tol(rhs));
}

IneqReport verify_subcritical_hls(const SphereGeometry& geom, double lambda, double p,
                                  const HarmonicExpansion& f, const SampleSpec& spec) {
  const double Q = geom.Q();
  if (!(lambda > 0.0 && lambda < Q)) throw DomainError("hls: lambda must lie in (0, Q)");
  if (!(p > 2.0 * Q / (2.0 * Q - lambda) && p <= 2.0)) {
    throw DomainError("hls: p must lie in (2Q/(2Q-lambda), 2]");
  }
  sphere::validate(geom, f, false);
  const auto fn = f.as_function();
  const auto lhs_est = sphere::hls_double_integral_mc(geom, lambda, fn, fn, spec);
  const auto [norm_sq, norm_sq_err] = lq_squared(geom, f, p, spec.derive(1));
  const double c = spectrum::hls_constant(geom, lambda);
  const double lhs = std::abs(lhs_est.value);
  const double rhs = c * norm_sq;
  Params params{{"n", geom.n()}, {"lambda", lambda}, {"p", p}};
  add_sampling(params, spec);
  return mc_report("hls", std::move(params), lhs, rhs,
                   std::hypot(lhs_est.std_error, c * norm_sq_err));
}

IneqReport verify_sobolev_conformal(const SphereGeometry& geom, double d,
                                    const HarmonicExpansion& f, const SampleSpec& spec) {
  require_order(geom, d);
  sphere::validate(geom, f, true);
  const double q = spectrum::critical_exponent(geom, d);
  const auto [lhs, err] = lq_squared(geom, f, q, spec);
  const double rhs = sphere::quadratic_form(geom, f, Intertwining{d}) *
                     spectrum::conformal_sobolev_constant(geom, d);
  Params params{{"n", geom.n()}, {"d", d}, {"q", q}};
  add_sampling(params, spec);
  return mc_report("sobolev-conformal", std::move(params), lhs, rhs, err);
}

IneqReport verify_sobolev_subcritical(const SphereGeometry& geom, double d, double q,
                                      const HarmonicExpansion& f, const SampleSpec& spec) {
  require_order(geom, d);
  if (!(q >= 2.0 && q < spectrum::critical_exponent(geom, d))) {
    throw DomainError("sobolev-subcritical: q must lie in [2, 2Q/(Q-d))");
  }
  sphere::validate(geom, f, true);
  const auto [lhs, err] = lq_squared(geom, f, q, spec);
  const double l2 = sphere::l2_norm_sq_exact(geom, f);
  const double lam0 = spectrum::lambda_j(geom, d, 0);
  const double qf = sphere::quadratic_form(geom, f, Intertwining{d});
  const double rhs = spectrum::subcritical_sobolev_constant(geom, d, q) * (qf - lam0 * lam0 * l2) + l2;
  Params params{{"n", geom.n()}, {"d", d}, {"q", q}};
  add_sampling(params, spec);
  return mc_report("sobolev-subcritical", std::move(params), lhs, rhs, err);
}

IneqReport verify_extremal_hls(const SphereGeometry& geom, double lambda, const ExtremalSpec& ext,
                               const SampleSpec& spec,
                               const std::optional<HarmonicExpansion>& perturbation) {
  ext.validate(geom);
  if (!std::holds_alternative<HlsExponent>(ext.kind)) {
    throw DomainError("extremal-hls needs an HLS exponent");
  }
  if (std::get<HlsExponent>(ext.kind).lambda != lambda) {
    throw DomainError("extremal-hls: exponent lambda differs from the inequality lambda");
  }
  if (norm_of(ext.zeta) > 0.9) throw DomainError("extremal-hls: |zeta| must be <= 0.9");
  if (perturbation) sphere::validate(geom, *perturbation, false);

  const double Q = geom.Q();
  const double p = 2.0 * Q / (2.0 * Q - lambda);
  sphere::SphereFunction fn;
  if (perturbation) {
    fn = [&ext, pert = *perturbation](PointView xi) { return ext(xi) + pert(xi); };
  } else {
    fn = [&ext](PointView xi) { return ext(xi); };
  }
  const auto src = sphere::PointSource::poisson_szego(geom, ext.zeta);
  const auto lhs_est = sphere::hls_double_integral_mc(geom, lambda, fn, fn, spec, &src);
  const auto norm = sphere::lq_norm_mc(geom, fn, p, spec.derive(1), &src);
  const double c = spectrum::hls_constant(geom, lambda);
  const double lhs = std::abs(lhs_est.value);
  const double ratio = lhs / (c * norm.value * norm.value);
  const double sigma = ratio * std::hypot(lhs_est.std_error / lhs, 2.0 * norm.std_error / norm.value);
  Params params{{"n", geom.n()}, {"lambda", lambda}, {"p", p}, {"zeta_norm", norm_of(ext.zeta)},
                {"perturbed", perturbation ? 1.0 : 0.0}};
  add_sampling(params, spec);
  IneqReport r = mc_report("extremal-hls", std::move(params), ratio, 1.0, sigma);
  r.notes.emplace_back("poisson_szego_importance_sampling");
  return r;
}

void require_real_pluriharmonic(const SphereGeometry& geom, const HarmonicExpansion& f) {
  sphere::validate(geom, f, false);
  for (const auto& t : f.terms()) {
    if (t.j > 0 && t.k > 0) {
      throw DomainError("function is not pluriharmonic: term of bidegree (" + std::to_string(t.j) +
                        "," + std::to_string(t.k) + ")");
    }
  }
  const sphere::UniformSampler sampler(geom, 0x5EA1u);
  sphere::PointBuffer p{};
  for (std::uint64_t i = 0; i < 16; ++i) {
    sampler.draw(i, p);
    const cplx v = f(PointView(p.data(), geom.axes()));
    if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v))) {
      throw DomainError("function is not real-valued");
    }
  }
}

IneqReport verify_onofri(const SphereGeometry& geom, const HarmonicExpansion& f,
                         const SampleSpec& spec) {
  require_real_pluriharmonic(geom, f);
  sphere::validate(geom, f, true);
  const double fact = std::exp(special::log_factorial(geom.n() + 1));
  const double quad = sphere::quadratic_form(geom, f, ConditionalQ{}) / (2.0 * fact);

  // f and e^f from the same antithetic pairs: the combination
  // mean(f) − log mean(e^f) has far less noise than either part
  const sphere::UniformSampler sampler(geom, spec.seed);
  const int axes = geom.axes();
  const auto m = accumulate<2>(spec, [&](std::uint64_t i) {
    sphere::PointBuffer p;
    sampler.draw(i, p);
    const double v = f(PointView(p.data(), axes)).real();
    for (int a = 0; a < axes; ++a) p[a] = -p[a];
    const double w = f(PointView(p.data(), axes)).real();
    return std::array<double, 2>{0.5 * (v + w), 0.5 * (std::exp(v) + std::exp(w))};
  });
  const double mean_f = m.mean(0);
  const double mean_e = m.mean(1);
  const double value = quad + mean_f - std::log(mean_e);
  const double sigma = m.stderr_of_linear({1.0, -1.0 / mean_e});
  Params params{{"n", geom.n()}, {"quadratic_term", quad}};
  add_sampling(params, spec);
  return mc_report("onofri", std::move(params), 0.0, value, sigma);
}

IneqReport verify_sobolev_end(const SphereGeometry& geom, double q, const HarmonicExpansion& f,
                              const SampleSpec& spec) {
  if (!(q >= 2.0) || !std::isfinite(q)) throw DomainError("sobolev-end: q must be >= 2");
  require_real_pluriharmonic(geom, f);
  sphere::validate(geom, f, true);
  const auto [lhs, err] = lq_squared(geom, f, q, spec);
  const double fact = std::exp(special::log_factorial(geom.n() + 1));
  const double rhs = (q - 2.0) / fact * sphere::quadratic_form(geom, f, ConditionalQ{}) +
                     sphere::l2_norm_sq_exact(geom, f);
  Params params{{"n", geom.n()}, {"q", q}};
  add_sampling(params, spec);
  return mc_report("sobolev-end", std::move(params), lhs, rhs, err);
}

}  // namespace crs::verify
