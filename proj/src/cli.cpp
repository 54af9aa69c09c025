#include "crsphere/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "crsphere/certify.hpp"
#include "crsphere/errors.hpp"
#include "crsphere/function_spec.hpp"
#include "crsphere/funk_hecke.hpp"
#include "crsphere/report_io.hpp"
#include "crsphere/spectrum.hpp"
#include "crsphere/verify.hpp"

#ifndef CRS_VERSION
#define CRS_VERSION "0.0.0"
#endif

namespace crs::cli {

namespace {

using report_io::ReportDocument;
using report_io::Table;

struct Output {
  std::string path;
  std::string format = "json";
};

struct Sampling {
  std::uint64_t seed = 20240101;
  std::string samples = "100000";
  unsigned streams = 8;

  SampleSpec spec() const {
    double v = 0.0;
    std::size_t used = 0;
    try {
      v = std::stod(samples, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != samples.size() || !(v >= 1.0) || v > 9007199254740992.0 || v != std::floor(v)) {
      throw DomainError("--samples must be a positive integer (e.g. 100000 or 1e7), got '" + samples + "'");
    }
    SampleSpec s;
    s.seed = seed;
    s.count = static_cast<std::uint64_t>(v);
    s.streams = streams;
    s.validate();
    return s;
  }
};

void add_output(CLI::App* sub, Output& o) {
  sub->add_option("--out", o.path, "Write the report to this file instead of stdout");
  sub->add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

void add_sampling(CLI::App* sub, Sampling& s) {
  sub->add_option("--seed", s.seed, "Base seed of the counter-based generator")->capture_default_str();
  sub->add_option("--samples", s.samples, "Monte Carlo sample count")->capture_default_str();
  sub->add_option("--streams", s.streams, "Independent streams (fixes the reduction order)")
      ->capture_default_str();
}

// Options that describe the run; paths are left out so reports compare equal
// wherever they are written.
std::vector<std::pair<std::string, std::string>> echo_config(const CLI::App* sub) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt == sub->get_help_ptr()) continue;
    const std::string name = opt->get_name();
    if (name.empty() || name == "--out" || name == "--config") continue;
    std::string value;
    if (opt->count() > 0) {
      const auto& res = opt->results();
      for (std::size_t i = 0; i < res.size(); ++i) value += (i ? "," : "") + res[i];
    } else {
      value = opt->get_default_str();
    }
    out.emplace_back(name.substr(name.find_first_not_of('-')), value);
  }
  return out;
}

std::string render(const ReportDocument& doc, const Output& o) {
  return o.format == "csv" ? report_io::to_csv(doc) : report_io::to_json(doc);
}

int finish(const ReportDocument& doc, const Output& o, std::ostream& out, std::ostream& err) {
  const std::string text = render(doc, o);
  if (o.path.empty()) {
    out << text;
  } else {
    std::ofstream f(o.path, std::ios::binary);
    if (!f) {
      err << "error: cannot open '" << o.path << "' for writing\n";
      return kExitUsage;
    }
    f << text;
    if (!f) {
      err << "error: write to '" << o.path << "' failed\n";
      return kExitUsage;
    }
  }
  const auto s = doc.summary();
  if (!o.path.empty()) {
    out << doc.command << ": " << s.total << " entries, " << s.holds_strict << " strict, "
        << s.holds_equality << " equality, " << s.violated << " violated\n";
  }
  return s.violated > 0 ? kExitViolation : kExitOk;
}

template <class T>
T require(const std::optional<T>& v, const char* flag, const std::string& why) {
  if (!v) throw DomainError(std::string(flag) + " is required " + why);
  return *v;
}

// ---- eig -------------------------------------------------------------------

struct EigArgs {
  int n = 1;
  std::string op;
  std::optional<double> d, lambda, alpha;
  int jmax = 3;
  int kmax = 3;
  Output out;
};

Table cmd_eig(const EigArgs& a) {
  const SphereGeometry geom(a.n);
  if (a.jmax < 0 || a.kmax < 0) throw DomainError("--jmax and --kmax must be >= 0");
  std::function<double(SpectralIndex)> eig;
  bool pluriharmonic_only = false;
  if (a.op == "intertwine") {
    const double d = require(a.d, "--d", "for --op intertwine");
    validate(geom, Intertwining{d});
    eig = [&geom, d](SpectralIndex i) { return spectrum::intertwine_eig(geom, Intertwining{d}, i); };
  } else if (a.op == "conditional") {
    pluriharmonic_only = true;
    eig = [&geom](SpectralIndex i) { return spectrum::intertwine_eig(geom, ConditionalQ{}, i); };
  } else if (a.op == "hls-gamma" || a.op == "hls-kernel") {
    const double l = require(a.lambda, "--lambda", "for --op " + a.op);
    validate(geom, HLSKernel{l});
    if (a.op == "hls-gamma") {
      eig = [&geom, l](SpectralIndex i) { return spectrum::hls_gamma(geom, l, i); };
    } else {
      eig = [&geom, l](SpectralIndex i) { return spectrum::intertwine_eig(geom, HLSKernel{l}, i); };
    }
  } else {
    const double al = require(a.alpha, "--alpha", "for --op " + a.op);
    validate(geom, WeightedHLSKernel{al});
    if (a.op == "fh-closed") {
      eig = [&geom, al](SpectralIndex i) { return spectrum::fh_eigenvalue_closed(geom, al, i); };
    } else {
      eig = [&geom, al](SpectralIndex i) { return spectrum::fh_eigenvalue_weighted(geom, al, i); };
    }
  }
  Table t;
  t.columns = {"j", "k", "eigenvalue"};
  for (int j = 0; j <= a.jmax; ++j) {
    for (int k = 0; k <= a.kmax; ++k) {
      if (pluriharmonic_only && j > 0 && k > 0) continue;
      t.rows.push_back({static_cast<double>(j), static_cast<double>(k), eig({j, k})});
    }
  }
  return t;
}

// ---- certify -----------------------------------------------------------------

struct CertifyArgs {
  std::string check = "spectral";
  std::vector<int> n{1, 2, 3};
  std::vector<double> d, q, lambda;
  int jmax = 30;
  int kmax = 30;
  int j = -1;
  double tol = 1e-10;
  double rhs_scale = 1.0;
  Output out;
};

std::vector<double> d_values(const CertifyArgs& a, const SphereGeometry& g) {
  if (!a.d.empty()) return a.d;
  std::vector<double> out;
  for (int i = 1; i <= 5; ++i) out.push_back(g.Q() * i / 6.0);
  return out;
}

std::vector<certify::CertGrid> grids(const CertifyArgs& a) {
  std::vector<certify::CertGrid> out;
  for (int n : a.n) {
    const SphereGeometry g(n);
    for (double d : d_values(a, g)) {
      if (!(d > 0.0 && d < g.Q())) throw DomainError("--d must lie in (0, Q) for every --n");
      const auto qs = a.q.empty() ? certify::chebyshev_points(2.0, spectrum::critical_exponent(g, d), 5) : a.q;
      for (double q : qs) {
        certify::CertGrid grid{g, d, q, a.jmax, a.kmax, a.tol, 1e-12, a.rhs_scale};
        grid.validate();
        out.push_back(grid);
      }
    }
  }
  return out;
}

std::vector<IneqReport> cmd_certify(const CertifyArgs& a) {
  static const std::vector<std::string> checks{"spectral", "derivative", "kernel", "limit", "duality"};
  const bool all = a.check == "all";
  const auto wants = [&](const std::string& c) { return all || a.check == c; };
  if (a.n.empty()) throw DomainError("--n needs at least one value");
  for (int n : a.n) (void)SphereGeometry(n);

  std::vector<certify::CertGrid> gs;
  if (wants("spectral") || wants("derivative")) gs = grids(a);
  if (wants("kernel") && !a.lambda.empty() && a.lambda.size() % 2 != 0) {
    throw DomainError("--lambda takes pairs lambda1,lambda2 for the kernel check");
  }
  if (wants("limit")) {
    for (double q : a.q) {
      if (!(q >= 2.0)) throw DomainError("--q must be >= 2 for the limit check");
    }
  }

  std::vector<IneqReport> out;
  const auto append = [&out](std::vector<IneqReport> v) {
    out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  };
  if (wants("spectral")) {
    for (const auto& g : gs) append(certify::certify_spectral_ineq(g));
  }
  if (wants("derivative")) {
    for (const auto& g : gs) {
      for (int j = 0; j <= g.j_max; ++j) {
        for (int k = 0; k <= g.k_max; ++k) {
          if (j + k >= 1) append(certify::certify_derivative_comparison(g, {j, k}).all());
        }
      }
    }
  }
  if (wants("kernel")) {
    for (int n : a.n) {
      const SphereGeometry g(n);
      std::vector<std::pair<double, double>> pairs;
      if (a.lambda.empty()) {
        for (int i = 0; i < 20; ++i) {
          const double l1 = g.Q() * (0.05 + 0.04 * i);
          pairs.emplace_back(l1, l1 + 0.1 * g.Q());
        }
      } else {
        for (std::size_t i = 0; i + 1 < a.lambda.size(); i += 2) pairs.emplace_back(a.lambda[i], a.lambda[i + 1]);
      }
      for (auto [l1, l2] : pairs) {
        for (int j = 0; j <= a.jmax; ++j) {
          for (int k = 0; k <= a.kmax; ++k) out.push_back(certify::certify_kernel_comparison(g, l1, l2, {j, k}));
        }
      }
    }
  }
  if (wants("limit")) {
    const std::vector<double> qs = a.q.empty() ? std::vector<double>{3.0, 4.0} : a.q;
    for (int n : a.n) {
      const SphereGeometry g(n);
      const double Q = g.Q();
      const std::vector<double> ds{Q - 1e-2, Q - 1e-4, Q - 1e-6};
      for (double q : qs) {
        for (int j = (a.j >= 0 ? a.j : 0); j <= (a.j >= 0 ? a.j : 5); ++j) {
          append(certify::certify_limit_dQ(g, q, j, ds).steps);
        }
      }
    }
  }
  if (wants("duality")) {
    for (int n : a.n) {
      const SphereGeometry g(n);
      for (double d : d_values(a, g)) {
        for (int j = 0; j <= a.jmax; ++j) {
          for (int k = 0; k <= a.kmax; ++k) out.push_back(certify::certify_duality_identity(g, d, {j, k}));
        }
      }
    }
  }
  (void)checks;
  return out;
}

// ---- funk-hecke ----------------------------------------------------------------

struct FunkHeckeArgs {
  int n = 1;
  std::string kernel = "power";
  std::optional<double> alpha;
  int jmax = 6;
  int kmax = 6;
  double tol = 1e-8;
  int nodes_t = 256;
  int nodes_phi = 512;
  Output out;
};

std::pair<Table, std::vector<IneqReport>> cmd_funk_hecke(const FunkHeckeArgs& a) {
  const SphereGeometry g(a.n);
  funk_hecke::QuadratureSpec quad{a.nodes_t, a.nodes_phi};
  quad.validate();
  if (a.jmax < 0 || a.kmax < 0) throw DomainError("--jmax and --kmax must be >= 0");
  if (!(a.tol > 0.0)) throw DomainError("--tol must be positive");
  funk_hecke::KernelSpec kernel = funk_hecke::ConstantKernel{};
  double alpha = 0.0;
  if (a.kernel != "constant") {
    alpha = require(a.alpha, "--alpha", "for the " + a.kernel + " kernel");
    validate(g, WeightedHLSKernel{alpha});
    if (a.kernel == "power") {
      kernel = funk_hecke::PowerKernel{alpha};
    } else {
      kernel = funk_hecke::WeightedPowerKernel{alpha};
    }
  }
  Table t;
  t.columns = {"j", "k", "quadrature", "quadrature_imag", "closed_form", "difference"};
  std::vector<IneqReport> reports;
  for (int j = 0; j <= a.jmax; ++j) {
    for (int k = 0; k <= a.kmax; ++k) {
      const auto r = funk_hecke::fh_eigenvalue_quadrature(g, kernel, {j, k}, quad);
      double closed = 0.0;
      if (a.kernel == "constant") {
        closed = (j == 0 && k == 0) ? 1.0 : 0.0;
      } else if (a.kernel == "power") {
        closed = spectrum::fh_eigenvalue_closed(g, alpha, {j, k});
      } else {
        closed = spectrum::fh_eigenvalue_weighted(g, alpha, {j, k});
      }
      // relative where the closed form is nonzero, absolute otherwise
      const double diff = std::abs(r.value - closed) / (closed != 0.0 ? std::abs(closed) : 1.0);
      t.rows.push_back({static_cast<double>(j), static_cast<double>(k), r.value.real(), r.value.imag(), closed, diff});
      IneqReport rep = make_report("funk-hecke",
                                   {{"n", a.n}, {"alpha", alpha}, {"j", j}, {"k", k}, {"rel_change", r.rel_change}},
                                   diff, a.tol, 0.0);
      rep.notes.emplace_back(funk_hecke::describe(kernel));
      if (!r.converged) rep.notes.emplace_back("quadrature_not_converged");
      reports.push_back(std::move(rep));
    }
  }
  return {t, reports};
}

// ---- verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string ineq;
  int n = 1;
  std::optional<double> lambda, d, q;
  double p = 2.0;
  std::string f = "const:1";
  std::string zeta;
  std::string perturb;
  Sampling sampling;
  Output out;
};

std::vector<IneqReport> cmd_verify(const VerifyArgs& a) {
  const SphereGeometry g(a.n);
  const SampleSpec spec = a.sampling.spec();
  const auto f = function_spec::parse(a.f, g);
  if (a.ineq == "hls") {
    const double l = require(a.lambda, "--lambda", "for --ineq hls");
    std::vector<IneqReport> out{verify::verify_subcritical_hls(g, l, a.p, f, spec)};
    if (a.p == 2.0) out.push_back(verify::verify_hls_spectral(g, l, f));
    return out;
  }
  if (a.ineq == "sobolev-conformal") {
    return {verify::verify_sobolev_conformal(g, require(a.d, "--d", "for --ineq sobolev-conformal"), f, spec)};
  }
  if (a.ineq == "sobolev-subcritical") {
    return {verify::verify_sobolev_subcritical(g, require(a.d, "--d", "for --ineq sobolev-subcritical"),
                                               require(a.q, "--q", "for --ineq sobolev-subcritical"), f, spec)};
  }
  if (a.ineq == "sobolev-end") {
    return {verify::verify_sobolev_end(g, require(a.q, "--q", "for --ineq sobolev-end"), f, spec)};
  }
  if (a.ineq == "onofri") return {verify::verify_onofri(g, f, spec)};
  // extremal-hls
  const double l = require(a.lambda, "--lambda", "for --ineq extremal-hls");
  if (a.zeta.empty()) throw DomainError("--zeta is required for --ineq extremal-hls");
  verify::ExtremalSpec ext{function_spec::parse_complex_list(a.zeta), verify::HlsExponent{l}};
  std::optional<sphere::HarmonicExpansion> pert;
  if (!a.perturb.empty()) pert = function_spec::parse(a.perturb, g);
  return {verify::verify_extremal_hls(g, l, ext, spec, pert)};
}

// ---- sample --------------------------------------------------------------------

struct SampleArgs {
  int n = 1;
  Sampling sampling;
  Output out;
};

Table cmd_sample(const SampleArgs& a) {
  const SphereGeometry g(a.n);
  SampleSpec spec = a.sampling.spec();
  if (spec.count > 10000000) throw DomainError("sample: --samples is capped at 1e7");
  Table t;
  for (int i = 1; i <= g.axes(); ++i) {
    t.columns.push_back("re_" + std::to_string(i));
    t.columns.push_back("im_" + std::to_string(i));
  }
  for (const auto& p : sphere::sample_uniform(g, spec)) {
    std::vector<double> row;
    for (const auto& z : p.coords()) {
      row.push_back(z.real());
      row.push_back(z.imag());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral and Monte Carlo checks of sharp inequalities on the CR sphere S^{2n+1}", "crs"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "INI file; one [section] per command, unknown keys are errors");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_version_flag("--version", CRS_VERSION);

  EigArgs eig;
  auto* s_eig = app.add_subcommand("eig", "Tabulate closed-form eigenvalues");
  s_eig->add_option("--n", eig.n, "Sphere S^{2n+1}")->capture_default_str();
  s_eig->add_option("--op", eig.op, "Operator")
      ->required()
      ->check(CLI::IsMember({"intertwine", "conditional", "hls-gamma", "hls-kernel", "fh-closed", "fh-weighted"}));
  s_eig->add_option("--d", eig.d, "Order of the intertwining operator");
  s_eig->add_option("--lambda", eig.lambda, "HLS kernel exponent");
  s_eig->add_option("--alpha", eig.alpha, "Power kernel exponent");
  s_eig->add_option("--jmax", eig.jmax)->capture_default_str();
  s_eig->add_option("--kmax", eig.kmax)->capture_default_str();
  add_output(s_eig, eig.out);

  CertifyArgs cert;
  auto* s_cert = app.add_subcommand("certify", "Certify the spectral inequalities on finite boxes");
  s_cert->add_option("--check", cert.check)
      ->check(CLI::IsMember({"spectral", "derivative", "kernel", "limit", "duality", "all"}))
      ->capture_default_str();
  s_cert->add_option("--n", cert.n, "Comma-separated n values")->delimiter(',')->capture_default_str();
  s_cert->add_option("--d", cert.d, "Comma-separated orders (default Q/6..5Q/6)")->delimiter(',');
  s_cert->add_option("--q", cert.q, "Comma-separated exponents (default 5 Chebyshev points)")->delimiter(',');
  s_cert->add_option("--lambda", cert.lambda, "Kernel check pairs lambda1,lambda2,...")->delimiter(',');
  s_cert->add_option("--j", cert.j, "Single j for the limit check (default 0..5)");
  s_cert->add_option("--jmax", cert.jmax)->capture_default_str();
  s_cert->add_option("--kmax", cert.kmax)->capture_default_str();
  s_cert->add_option("--tol", cert.tol, "Relative equality tolerance")->capture_default_str();
  s_cert->add_option("--rhs-scale", cert.rhs_scale, "Scale every right-hand side (failure injection)")
      ->capture_default_str();
  add_output(s_cert, cert.out);

  FunkHeckeArgs fh;
  auto* s_fh = app.add_subcommand("funk-hecke", "Compare quadrature eigenvalues with closed forms");
  s_fh->add_option("--n", fh.n)->capture_default_str();
  s_fh->add_option("--kernel", fh.kernel)
      ->check(CLI::IsMember({"power", "weighted", "constant"}))
      ->capture_default_str();
  s_fh->add_option("--alpha", fh.alpha);
  s_fh->add_option("--jmax", fh.jmax)->capture_default_str();
  s_fh->add_option("--kmax", fh.kmax)->capture_default_str();
  s_fh->add_option("--tol", fh.tol, "Allowed relative difference")->capture_default_str();
  s_fh->add_option("--nodes-t", fh.nodes_t)->capture_default_str();
  s_fh->add_option("--nodes-phi", fh.nodes_phi)->capture_default_str();
  add_output(s_fh, fh.out);

  VerifyArgs ver;
  auto* s_ver = app.add_subcommand("verify", "Monte Carlo check of an integral inequality");
  s_ver->add_option("--ineq", ver.ineq)
      ->required()
      ->check(CLI::IsMember({"hls", "sobolev-conformal", "sobolev-subcritical", "sobolev-end", "onofri", "extremal-hls"}));
  s_ver->add_option("--n", ver.n)->capture_default_str();
  s_ver->add_option("--lambda", ver.lambda);
  s_ver->add_option("--p", ver.p, "HLS exponent p")->capture_default_str();
  s_ver->add_option("--d", ver.d);
  s_ver->add_option("--q", ver.q);
  s_ver->add_option("--f", ver.f, "Function spec, e.g. const:1+mono:0.4,1,0,1,2")->capture_default_str();
  s_ver->add_option("--zeta", ver.zeta, "Extremal centre, comma-separated complex");
  s_ver->add_option("--perturb", ver.perturb, "Function spec added to the extremal");
  add_sampling(s_ver, ver.sampling);
  add_output(s_ver, ver.out);

  SampleArgs smp;
  auto* s_smp = app.add_subcommand("sample", "Dump uniform points of S^{2n+1}");
  s_smp->add_option("--n", smp.n)->capture_default_str();
  add_sampling(s_smp, smp.sampling);
  add_output(s_smp, smp.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  ReportDocument doc;
  doc.tool_version = CRS_VERSION;
  doc.command = sub->get_name();
  doc.config = echo_config(sub);
  doc.timestamp = report_io::timestamp_now();
  try {
    if (sub == s_eig) {
      doc.table = cmd_eig(eig);
      return finish(doc, eig.out, out, err);
    }
    if (sub == s_cert) {
      doc.entries = cmd_certify(cert);
      return finish(doc, cert.out, out, err);
    }
    if (sub == s_fh) {
      auto [t, e] = cmd_funk_hecke(fh);
      doc.table = std::move(t);
      doc.entries = std::move(e);
      return finish(doc, fh.out, out, err);
    }
    if (sub == s_ver) {
      doc.entries = cmd_verify(ver);
      return finish(doc, ver.out, out, err);
    }
    doc.table = cmd_sample(smp);
    return finish(doc, smp.out, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace crs::cli
