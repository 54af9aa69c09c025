#include "crsphere/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "crsphere/errors.hpp"
#include "crsphere/rng.hpp"
#include "crsphere/special_fn.hpp"
#include "crsphere/spectrum.hpp"

namespace crs::sphere {
namespace {

double norm_sq(PointView p) {
  double s = 0.0;
  for (const auto& c : p) s += std::norm(c);
  return s;
}

void rescale(std::span<cplx> p) {
  const double inv = 1.0 / std::sqrt(norm_sq(p));
  for (auto& c : p) c *= inv;
}

cplx ipow(cplx z, int e) {
  cplx r = 1.0;
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

// Torus character of a monomial term: +j on axis_z, −k on axis_zbar.
std::vector<int> character(const HarmonicTerm& t, int axes) {
  std::vector<int> c(axes, 0);
  if (t.j > 0) c[t.axis_z] += t.j;
  if (t.k > 0) c[t.axis_zbar] -= t.k;
  return c;
}

}  // namespace

SpherePoint::SpherePoint(std::vector<cplx> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("SpherePoint: no coordinates");
  if (std::abs(norm_sq(coords_) - 1.0) > 1e-14) {
    throw DomainError("SpherePoint: coordinates are not on the unit sphere");
  }
}

SpherePoint SpherePoint::normalized(std::vector<cplx> coords) {
  if (coords.empty() || norm_sq(coords) == 0.0) {
    throw DomainError("SpherePoint: cannot normalize a zero vector");
  }
  rescale(coords);
  return SpherePoint(std::move(coords));
}

cplx hermitian_dot(PointView xi, PointView eta) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) s += xi[i] * std::conj(eta[i]);
  return s;
}

cplx HarmonicTerm::basis_value(PointView p) const {
  cplx v = 1.0;
  if (j > 0) v *= ipow(p[axis_z], j);
  if (k > 0) v *= ipow(std::conj(p[axis_zbar]), k);
  return v;
}

HarmonicExpansion HarmonicExpansion::constant(cplx c) {
  return HarmonicExpansion({HarmonicTerm{0, 0, 0, 0, c}});
}

HarmonicExpansion& HarmonicExpansion::add(const HarmonicTerm& t) {
  terms_.push_back(t);
  return *this;
}

HarmonicExpansion& HarmonicExpansion::add_real_pair(cplx c, int j, int axis) {
  if (j < 1) throw DomainError("add_real_pair: degree must be >= 1");
  terms_.push_back({j, 0, axis, axis, c});
  terms_.push_back({0, j, axis, axis, std::conj(c)});
  return *this;
}

cplx HarmonicExpansion::operator()(PointView p) const {
  cplx s = 0.0;
  for (const auto& t : terms_) s += t.coefficient * t.basis_value(p);
  return s;
}

SphereFunction HarmonicExpansion::as_function() const {
  return [f = *this](PointView p) { return f(p); };
}

void validate(const SphereGeometry& geom, const HarmonicExpansion& f, bool require_orthogonal) {
  const int axes = geom.axes();
  for (const auto& t : f.terms()) {
    if (t.j < 0 || t.k < 0) throw DomainError("harmonic term: negative degree");
    if (t.axis_z < 0 || t.axis_z >= axes || t.axis_zbar < 0 || t.axis_zbar >= axes) {
      throw DomainError("harmonic term: axis out of range for n=" + std::to_string(geom.n()));
    }
    if (t.j > 0 && t.k > 0 && t.axis_z == t.axis_zbar) {
      throw DomainError("harmonic term: z and z-bar degrees on the same axis is not harmonic");
    }
  }
  if (!require_orthogonal) return;
  std::map<std::vector<int>, std::size_t> seen;
  for (std::size_t i = 0; i < f.terms().size(); ++i) {
    const auto [it, inserted] = seen.emplace(character(f.terms()[i], axes), i);
    if (!inserted) {
      throw NonOrthogonalError("harmonic terms " + std::to_string(it->second) + " and " +
                               std::to_string(i) + " share a bidegree signature on the same axes");
    }
  }
}

UniformSampler::UniformSampler(const SphereGeometry& geom, std::uint64_t seed,
                               std::uint32_t lane)
    : axes_(geom.axes()),
      lane_(lane),
      key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

void UniformSampler::draw(std::uint64_t index, std::span<cplx> out) const {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (int c = 0; c < axes_; ++c) {
    const rng::Counter ctr{static_cast<std::uint32_t>(index),
                           static_cast<std::uint32_t>(index >> 32),
                           static_cast<std::uint32_t>(c), lane_};
    const auto w = rng::philox4x32(ctr, key_);
    const double u1 = rng::unit_open_closed(w[0], w[1]);
    const double u2 = rng::unit_open_closed(w[2], w[3]);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    out[c] = std::polar(radius, kTwoPi * u2);
  }
  const double s = norm_sq(out.first(axes_));
  if (s == 0.0) {  // probability zero; keep the point well defined
    out[0] = 1.0;
    return;
  }
  rescale(out.first(axes_));
}

PointSource::PointSource(int axes, std::vector<cplx> center)
    : axes_(axes), center_(std::move(center)), center_norm_sq_(norm_sq(center_)) {}

PointSource PointSource::uniform(const SphereGeometry& geom) { return PointSource(geom.axes(), {}); }

PointSource PointSource::poisson_szego(const SphereGeometry& geom, std::vector<cplx> center) {
  if (static_cast<int>(center.size()) != geom.axes()) {
    throw DomainError("Poisson-Szego center must have n+1 coordinates");
  }
  if (!(norm_sq(center) < 1.0)) throw DomainError("Poisson-Szego center must satisfy |zeta| < 1");
  return PointSource(geom.axes(), std::move(center));
}

void ball_automorphism(PointView a, PointView z, std::span<cplx> out) {
  const double a2 = norm_sq(a);
  if (a2 == 0.0) {
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = -z[i];
    return;
  }
  const cplx za = hermitian_dot(z, a);
  const double s = std::sqrt(1.0 - a2);
  const cplx denom = 1.0 - za;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const cplx proj = za * a[i] / a2;
    out[i] = (a[i] - proj - s * (z[i] - proj)) / denom;
  }
}

double poisson_szego_density(const SphereGeometry& geom, PointView a, PointView xi) {
  const int N = geom.axes();
  const double a2 = norm_sq(a);
  return std::pow(1.0 - a2, N) / std::pow(std::norm(1.0 - hermitian_dot(xi, a)), N);
}

double PointSource::draw(const UniformSampler& sampler, std::uint64_t index,
                         std::span<cplx> out) const {
  if (center_.empty()) {
    sampler.draw(index, out);
    return 1.0;
  }
  PointBuffer omega;
  sampler.draw(index, omega);
  const std::span<cplx> dst = out.first(axes_);
  ball_automorphism(center_, std::span<const cplx>(omega.data(), axes_), dst);
  rescale(dst);
  const int N = axes_;
  return std::pow(std::norm(1.0 - hermitian_dot(dst, center_)), N) /
         std::pow(1.0 - center_norm_sq_, N);
}

std::vector<SpherePoint> sample_uniform(const SphereGeometry& geom, const SampleSpec& spec) {
  spec.validate();
  const UniformSampler sampler(geom, spec.seed);
  std::vector<SpherePoint> points;
  points.reserve(spec.count);
  PointBuffer buf;
  for (std::uint64_t i = 0; i < spec.count; ++i) {
    sampler.draw(i, buf);
    points.emplace_back(std::vector<cplx>(buf.begin(), buf.begin() + geom.axes()));
  }
  return points;
}

double moment_exact(const SphereGeometry& geom, int a, int b) {
  if (a < 0 || b < 0) throw DomainError("moment_exact: exponents must be >= 0");
  const int n = geom.n();
  return std::exp(special::log_factorial(a) + special::log_factorial(b) +
                  special::log_factorial(n) - special::log_factorial(n + a + b));
}

cplx evaluate(const HarmonicExpansion& f, const SpherePoint& p) { return f(p.coords()); }

double l2_norm_sq_exact(const SphereGeometry& geom, const HarmonicExpansion& f) {
  validate(geom, f, true);
  double s = 0.0;
  for (const auto& t : f.terms()) s += std::norm(t.coefficient) * moment_exact(geom, t.j, t.k);
  return s;
}

double l2_norm_exact(const SphereGeometry& geom, const HarmonicExpansion& f) {
  return std::sqrt(l2_norm_sq_exact(geom, f));
}

double quadratic_form(const SphereGeometry& geom, const HarmonicExpansion& f,
                      const OperatorKind& kind) {
  validate(geom, f, true);
  double s = 0.0;
  for (const auto& t : f.terms()) {
    const double eig = spectrum::intertwine_eig(geom, kind, SpectralIndex(t.j, t.k));
    s += eig * std::norm(t.coefficient) * moment_exact(geom, t.j, t.k);
  }
  return s;
}

double hls_kernel(PointView xi, PointView eta, double lambda) {
  return std::pow(std::norm(1.0 - hermitian_dot(xi, eta)), -lambda / 4.0);
}

McEstimate<double> lq_norm_mc(const SphereGeometry& geom, const SphereFunction& f, double q,
                              const SampleSpec& spec, const PointSource* source) {
  if (!(q >= 1.0)) throw DomainError("lq_norm_mc: q must be >= 1");
  const PointSource uniform = PointSource::uniform(geom);
  const PointSource& src = source ? *source : uniform;
  const UniformSampler sampler(geom, spec.seed);
  const int axes = geom.axes();
  const bool antithetic = src.is_uniform();
  const auto m = accumulate<1>(spec, [&](std::uint64_t i) {
    PointBuffer p;
    const double w = src.draw(sampler, i, p);
    double v = std::pow(std::abs(f(PointView(p.data(), axes))), q) * w;
    if (antithetic) {
      for (int a = 0; a < axes; ++a) p[a] = -p[a];
      v = 0.5 * (v + std::pow(std::abs(f(PointView(p.data(), axes))), q));
    }
    return std::array<double, 1>{v};
  });
  const double mean = m.mean(0);
  McEstimate<double> est;
  est.count = m.count();
  est.value = std::pow(mean, 1.0 / q);
  est.std_error = mean > 0.0 ? est.value / (q * mean) * m.stderr_of_mean(0) : 0.0;
  return est;
}

McEstimate<cplx> mean_mc(const SphereGeometry& geom, const SphereFunction& f,
                         const SampleSpec& spec) {
  const UniformSampler sampler(geom, spec.seed);
  const int axes = geom.axes();
  const auto m = accumulate<2>(spec, [&](std::uint64_t i) {
    PointBuffer p;
    sampler.draw(i, p);
    const cplx v = f(PointView(p.data(), axes));
    return std::array<double, 2>{v.real(), v.imag()};
  });
  return {cplx(m.mean(0), m.mean(1)),
          std::hypot(m.stderr_of_mean(0), m.stderr_of_mean(1)), m.count()};
}

McEstimate<cplx> kernel_apply_mc(const SphereGeometry& geom, double lambda,
                                 const SphereFunction& f, const SpherePoint& p,
                                 const SampleSpec& spec) {
  if (!(lambda > 0.0 && lambda < geom.Q())) throw DomainError("kernel_apply_mc: lambda must lie in (0, Q)");
  if (static_cast<int>(p.size()) != geom.axes()) throw DomainError("kernel_apply_mc: point dimension mismatch");
  const UniformSampler sampler(geom, spec.seed);
  const int axes = geom.axes();
  const cplx fp = f(p.coords());
  // control variate: f(p) times the kernel mass is exact, only f(η) − f(p) is sampled
  const auto m = accumulate<2>(spec, [&](std::uint64_t i) {
    PointBuffer eta;
    sampler.draw(i, eta);
    const PointView e(eta.data(), axes);
    const cplx v = hls_kernel(p.coords(), e, lambda) * (f(e) - fp);
    return std::array<double, 2>{v.real(), v.imag()};
  });
  return {cplx(m.mean(0), m.mean(1)) + fp * spectrum::hls_constant(geom, lambda),
          std::hypot(m.stderr_of_mean(0), m.stderr_of_mean(1)), m.count()};
}

McEstimate<cplx> hls_double_integral_mc(const SphereGeometry& geom, double lambda,
                                        const SphereFunction& f, const SphereFunction& g,
                                        const SampleSpec& spec, const PointSource* source) {
  if (!(lambda > 0.0 && lambda < geom.Q())) {
    throw DomainError("hls_double_integral_mc: lambda must lie in (0, Q)");
  }
  const PointSource uniform = PointSource::uniform(geom);
  const PointSource& src = source ? *source : uniform;
  const UniformSampler first(geom, spec.seed, 0);
  const UniformSampler second(geom, spec.seed, 1);
  const int axes = geom.axes();
  const auto m = accumulate<2>(spec, [&](std::uint64_t i) {
    PointBuffer x;
    PointBuffer y;
    const double wx = src.draw(first, i, x);
    const double wy = src.draw(second, i, y);
    const PointView xv(x.data(), axes);
    const PointView yv(y.data(), axes);
    const cplx v = std::conj(f(xv)) * g(yv) * (hls_kernel(xv, yv, lambda) * wx * wy);
    return std::array<double, 2>{v.real(), v.imag()};
  });
  return {cplx(m.mean(0), m.mean(1)),
          std::hypot(m.stderr_of_mean(0), m.stderr_of_mean(1)), m.count()};
}

McEstimate<double> exp_integral_mc(const SphereGeometry& geom, const SphereFunction& f,
                                   const SampleSpec& spec) {
  const UniformSampler sampler(geom, spec.seed);
  const int axes = geom.axes();
  const auto m = accumulate<1>(spec, [&](std::uint64_t i) {
    PointBuffer p;
    sampler.draw(i, p);
    const double v = std::exp(f(PointView(p.data(), axes)).real());
    for (int a = 0; a < axes; ++a) p[a] = -p[a];
    return std::array<double, 1>{0.5 * (v + std::exp(f(PointView(p.data(), axes)).real()))};
  });
  return {m.mean(0), m.stderr_of_mean(0), m.count()};
}

}  // namespace crs::sphere
