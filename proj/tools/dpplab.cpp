// dpplab: command-line front end for the eigenangle-kernel toolkit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpplab/counting.hpp"
#include "dpplab/error.hpp"
#include "dpplab/experiments.hpp"
#include "dpplab/haar.hpp"
#include "dpplab/kernels.hpp"
#include "dpplab/opcalc.hpp"
#include "dpplab/parallel.hpp"
#include "dpplab/series.hpp"
#include "dpplab/simd.hpp"
#include "json.hpp"

namespace {

using namespace dpplab;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string rational_text(const series::Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

// ---------------------------------------------------------------- coeffs
struct CoeffsArgs {
  std::string kind = "csc";
  int max_k = 10;
  std::string format = "csv";
};

int run_coeffs(const CoeffsArgs& a) {
  struct Row {
    unsigned k;
    series::Rational exact;
    double value;
  };
  std::vector<Row> rows;
  for (int k = 0; k <= a.max_k; ++k) {
    const auto uk = static_cast<unsigned>(k);
    series::Rational r = a.kind == "bernoulli" ? series::bernoulli(uk)
                                               : series::coefficient(series::parse_coeff_kind(a.kind), uk);
    const double v = series::to_double(r);
    rows.push_back({uk, std::move(r), v});
  }
  if (a.format == "json") {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& r : rows) entries.push_back({{"k", r.k}, {"exact", rational_text(r.exact)}, {"value", r.value}});
    std::cout << nlohmann::json{{"kind", a.kind}, {"entries", entries}}.dump(2) << '\n';
  } else {
    std::cout << "k,exact,value\n";
    for (const auto& r : rows) std::cout << r.k << ',' << rational_text(r.exact) << ',' << num(r.value) << '\n';
  }
  return 0;
}

// ----------------------------------------------------------- kernel-eval
struct KernelEvalArgs {
  std::string ensemble = "U";
  int n = 16;
  std::string scaling = "bulk";
  int grid = 8;
  double s = 1.0;
};

int run_kernel_eval(const KernelEvalArgs& a) {
  const kernels::KernelSpec spec{parse_ensemble(a.ensemble), a.n,
                                 a.scaling == "raw" ? kernels::Scaling::raw : kernels::Scaling::bulk};
  std::vector<double> pts(static_cast<std::size_t>(a.grid));
  if (spec.scaling == kernels::Scaling::raw) {
    // Uniform points in [0, Lambda).
    const double top = spec.ensemble == Ensemble::U ? 2.0 * std::numbers::pi : std::numbers::pi;
    for (int i = 0; i < a.grid; ++i) pts[i] = top * i / a.grid;
  } else {
    for (int i = 0; i < a.grid; ++i) pts[i] = a.grid == 1 ? 0.0 : -a.s + 2.0 * a.s * i / (a.grid - 1);
  }
  for (int i = 0; i < a.grid; ++i) {
    for (int j = 0; j < a.grid; ++j) {
      std::cout << (j ? "," : "") << num(kernels::evaluate(spec, pts[i], pts[j]));
    }
    std::cout << '\n';
  }
  return 0;
}

// -------------------------------------------------- verify-decomposition
struct VerifyArgs {
  std::string which = "A";
  int k = 0;
  double s = 1.0;
  int n = 80;
};

int run_verify(const VerifyArgs& a) {
  std::cout << "which,k,s,n,max_abs,relative\n";
  auto row = [&](const std::string& name, const opcalc::DecompositionResidual& r) {
    std::cout << name << ',' << a.k << ',' << num(a.s) << ',' << a.n << ',' << num(r.max_abs) << ','
              << num(r.relative) << '\n';
  };
  if (a.which == "K23") {
    const auto r = opcalc::verify_decomposition_K23(a.s, a.n);
    row("K2", r.k2);
    row("K3", r.k3);
  } else {
    row(a.which, opcalc::verify_decomposition_A(a.k, a.s, a.n, a.which == "Aprime"));
  }
  return 0;
}

// -------------------------------------------------------------- tracenorm
struct EnsembleArgs {
  std::string ensemble = "U";
  int n_matrix = 32;
  double s = 1.0;
  int grid = 80;
};

int run_tracenorm(const EnsembleArgs& a) {
  const kernels::KernelSpec spec{parse_ensemble(a.ensemble), a.n_matrix, kernels::Scaling::bulk};
  const kernels::KernelSpec sine{Ensemble::SINE, a.n_matrix, kernels::Scaling::bulk};
  const auto refined = opcalc::trace_norm_checked(
      [&](double x, double y) { return kernels::evaluate(spec, x, y) - kernels::evaluate(sine, x, y); }, -a.s, a.s,
      a.grid);
  std::cout << "ensemble,N,s,grid,trace_norm,refined_trace_norm,series_bound\n";
  std::cout << to_string(spec.ensemble) << ',' << a.n_matrix << ',' << num(a.s) << ',' << a.grid << ','
            << num(refined.value) << ',' << num(refined.refined) << ',';
  if (spec.ensemble == Ensemble::U) std::cout << num(experiments::cue_series_bound(a.n_matrix, a.s));
  std::cout << '\n';
  return 0;
}

// --------------------------------------------------------------------- w1
int run_w1(const EnsembleArgs& a, const std::vector<double>& interval) {
  const kernels::KernelSpec spec{parse_ensemble(a.ensemble), a.n_matrix, kernels::Scaling::bulk};
  counting::Interval iv{-a.s, a.s};
  if (interval.size() == 2) iv = {interval[0], interval[1]};
  if (iv.lo < -a.s || iv.hi > a.s) throw DomainError("--interval must lie inside [-s, s]");
  const auto d = counting::chain_check_on(spec, iv, a.grid);
  std::cout << "ensemble,N,lo,hi,dtv,w1,trace_norm,mean,variance,sine_mean,sine_variance\n";
  std::cout << to_string(spec.ensemble) << ',' << a.n_matrix << ',' << num(iv.lo) << ',' << num(iv.hi) << ','
            << num(d.chain.dtv) << ',' << num(d.chain.w1) << ',' << num(d.chain.tnorm) << ','
            << num(d.law.mean()) << ',' << num(d.law.variance()) << ',' << num(d.sine_law.mean()) << ','
            << num(d.sine_law.variance()) << '\n';
  return d.chain.holds() ? 0 : 3;
}

// ----------------------------------------------------------------- sample
struct SampleArgs {
  std::string ensemble = "U";
  int n_matrix = 8;
  int count = 1;
  std::uint64_t seed = 1;
  std::string emit_angles;
};

int run_sample(const SampleArgs& a) {
  const Ensemble e = parse_ensemble(a.ensemble);
  std::ofstream angles_out;
  if (!a.emit_angles.empty()) {
    angles_out.open(a.emit_angles);
    if (!angles_out) throw std::runtime_error("cannot open " + a.emit_angles);
    angles_out << "sample,index,theta,bulk_x\n";
  }
  std::cout << "sample,dim,angles,unitarity_residual,symplectic_residual\n";
  for (int i = 0; i < a.count; ++i) {
    const auto g = haar::sample(e, a.n_matrix, derive_seed(a.seed, static_cast<std::uint64_t>(i)));
    const auto angles = haar::eigenangles(g);
    const auto xs = haar::bulk_rescale(angles);
    std::cout << i << ',' << g.dim() << ',' << angles.angles.size() << ','
              << num(haar::unitarity_residual(g.entries())) << ',';
    if (e == Ensemble::SP) std::cout << num(haar::symplectic_residual(g.entries()));
    std::cout << '\n';
    if (angles_out) {
      for (std::size_t j = 0; j < xs.size(); ++j) {
        angles_out << i << ',' << j << ',' << num(angles.angles[j]) << ',' << num(xs[j]) << '\n';
      }
    }
  }
  return 0;
}

// ------------------------------------------------------------- mc-compare
struct McArgs {
  std::string ensemble = "U";
  int n_matrix = 32;
  double s = 1.0;
  int samples = 10000;
  std::uint64_t seed = 1;
  int grid = 80;
};

int run_mc_compare(const McArgs& a) {
  const Ensemble e = parse_ensemble(a.ensemble);
  const kernels::KernelSpec spec{e, a.n_matrix, kernels::Scaling::bulk};
  const counting::Interval iv{-a.s, a.s};
  const auto exact = counting::dpp_count_law(spec, iv, a.grid);
  const auto mc = haar::mc_count_law(e, a.n_matrix, iv, a.samples, a.seed);
  std::cout << "# ensemble=" << to_string(e) << " N=" << a.n_matrix << " s=" << num(a.s) << " samples=" << a.samples
            << '\n';
  std::cout << "tv,mc_mean,mc_mean_se,exact_mean,mc_variance,exact_variance\n";
  std::cout << num(counting::tv_integer(mc.law, exact.law)) << ',' << num(mc.mean) << ','
            << num(mc.mean_standard_error) << ',' << num(exact.law.mean()) << ',' << num(mc.variance) << ','
            << num(exact.law.variance()) << '\n';
  std::cout << "k,mc_pmf,mc_se,exact_pmf\n";
  const std::size_t top = std::max(mc.law.support_size(), exact.law.support_size());
  for (std::size_t k = 0; k < top; ++k) {
    const double se = k < mc.pmf_standard_errors.size() ? mc.pmf_standard_errors[k] : 0.0;
    std::cout << k << ',' << num(mc.law[k]) << ',' << num(se) << ',' << num(exact.law[k]) << '\n';
  }
  return 0;
}

// ------------------------------------------------------------- rate-sweep
struct SweepArgs {
  std::string ensemble;
  std::string n_list;
  double s = 0.0;
  int grid = 0;
  int mc_samples = -1;
  std::uint64_t seed = 0;
  std::string config;
  std::string out;
  std::string svg;
  std::string format = "csv";
};

int run_rate_sweep(const SweepArgs& a, const CLI::App& cmd) {
  experiments::SweepConfig cfg;
  if (!a.config.empty()) cfg = experiments::load_sweep_config(a.config);
  if (cmd.count("--ensemble")) cfg.ensemble = parse_ensemble(a.ensemble);
  if (cmd.count("--n-list")) cfg.n_values = experiments::parse_int_list(a.n_list);
  if (cmd.count("--s")) cfg.s = a.s;
  if (cmd.count("--grid")) cfg.grid_size = a.grid;
  if (cmd.count("--mc-samples")) cfg.mc_samples = a.mc_samples;
  if (cmd.count("--seed")) cfg.seed = a.seed;

  const auto report = experiments::rate_sweep(cfg);
  const auto format = experiments::parse_report_format(a.format);
  if (a.out.empty()) {
    experiments::emit_report(report, format, std::cout);
  } else {
    experiments::write_report(report, format, a.out);
  }
  if (!a.svg.empty()) experiments::write_report(report, experiments::ReportFormat::svg, a.svg);

  std::cerr << "slope_w1=" << report.w1_fit.slope << " r2=" << report.w1_fit.r_squared
            << " slope_trace_norm=" << report.tnorm_fit.slope << " r2=" << report.tnorm_fit.r_squared << '\n';
  for (const auto& v : report.violations) std::cerr << "invariant violated: " << v << '\n';
  return report.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinantal eigenangle kernels, operator norms and convergence-rate sweeps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dpplab 0.1.0");
  app.footer("Environment: DPPLAB_THREADS (worker count), DPPLAB_SIMD (scalar|avx2|neon|auto)");

  const std::vector<std::string> ensembles = {"U", "SO_even", "SO_odd", "SOminus_odd", "SOminus_even", "SP", "SINE"};
  int status = 0;

  CoeffsArgs coeffs;
  auto* c = app.add_subcommand("coeffs", "Bernoulli numbers and csc/cot/tan series coefficients");
  c->add_option("--kind", coeffs.kind)->check(CLI::IsMember({"csc", "cot", "tan", "bernoulli"}));
  c->add_option("--max-k", coeffs.max_k)->check(CLI::NonNegativeNumber);
  c->add_option("--format", coeffs.format)->check(CLI::IsMember({"csv", "json"}));
  c->callback([&] { status = run_coeffs(coeffs); });

  KernelEvalArgs ke;
  auto* k = app.add_subcommand("kernel-eval", "Sample a kernel on an M x M grid");
  k->add_option("--ensemble", ke.ensemble)->check(CLI::IsMember(ensembles));
  k->add_option("--n", ke.n)->check(CLI::PositiveNumber);
  k->add_option("--scaling", ke.scaling)->check(CLI::IsMember({"raw", "bulk"}));
  k->add_option("--grid", ke.grid)->check(CLI::PositiveNumber);
  k->add_option("--s", ke.s)->check(CLI::PositiveNumber);
  std::string ke_format = "csv";
  k->add_option("--format", ke_format)->check(CLI::IsMember({"csv"}));
  k->callback([&] { status = run_kernel_eval(ke); });

  VerifyArgs va;
  auto* v = app.add_subcommand("verify-decomposition", "Residual of a C_j/S_j block decomposition");
  v->add_option("--which", va.which)->check(CLI::IsMember({"A", "Aprime", "K23"}));
  v->add_option("--k", va.k)->check(CLI::NonNegativeNumber);
  v->add_option("--s", va.s)->check(CLI::PositiveNumber);
  v->add_option("--n", va.n)->check(CLI::PositiveNumber);
  v->callback([&] { status = run_verify(va); });

  EnsembleArgs tn;
  auto* t = app.add_subcommand("tracenorm", "Trace norm of bulk kernel minus sine kernel on [-s, s]");
  t->add_option("--ensemble", tn.ensemble)->check(CLI::IsMember(ensembles));
  t->add_option("--n-matrix", tn.n_matrix)->check(CLI::PositiveNumber);
  t->add_option("--s", tn.s)->check(CLI::PositiveNumber);
  t->add_option("--grid", tn.grid)->check(CLI::PositiveNumber);
  t->callback([&] { status = run_tracenorm(tn); });

  EnsembleArgs wa;
  std::vector<double> interval;
  auto* w = app.add_subcommand("w1", "Counting-law distances to the sine process");
  w->add_option("--ensemble", wa.ensemble)->check(CLI::IsMember(ensembles));
  w->add_option("--n-matrix", wa.n_matrix)->check(CLI::PositiveNumber);
  w->add_option("--s", wa.s)->check(CLI::PositiveNumber);
  w->add_option("--grid", wa.grid)->check(CLI::PositiveNumber);
  w->add_option("--interval", interval, "lo hi")->expected(2);
  w->callback([&] { status = run_w1(wa, interval); });

  SampleArgs sa;
  auto* s = app.add_subcommand("sample", "Draw Haar samples and extract nontrivial eigenangles");
  s->add_option("--ensemble", sa.ensemble)->check(CLI::IsMember(ensembles));
  s->add_option("--n-matrix", sa.n_matrix)->check(CLI::PositiveNumber);
  s->add_option("--count", sa.count)->check(CLI::PositiveNumber);
  s->add_option("--seed", sa.seed);
  s->add_option("--emit-angles", sa.emit_angles);
  s->callback([&] { status = run_sample(sa); });

  McArgs ma;
  auto* m = app.add_subcommand("mc-compare", "Empirical vs exact counting law on [-s, s]");
  m->add_option("--ensemble", ma.ensemble)->check(CLI::IsMember(ensembles));
  m->add_option("--n-matrix", ma.n_matrix)->check(CLI::PositiveNumber);
  m->add_option("--s", ma.s)->check(CLI::PositiveNumber);
  m->add_option("--samples", ma.samples)->check(CLI::PositiveNumber);
  m->add_option("--seed", ma.seed);
  m->add_option("--grid", ma.grid)->check(CLI::PositiveNumber);
  m->callback([&] { status = run_mc_compare(ma); });

  SweepArgs ra;
  auto* r = app.add_subcommand("rate-sweep", "Convergence-rate sweep over N with slope fits");
  r->add_option("--ensemble", ra.ensemble)->check(CLI::IsMember(ensembles));
  r->add_option("--n-list", ra.n_list, "comma-separated N values");
  r->add_option("--s", ra.s)->check(CLI::PositiveNumber);
  r->add_option("--grid", ra.grid)->check(CLI::PositiveNumber);
  r->add_option("--mc-samples", ra.mc_samples)->check(CLI::NonNegativeNumber);
  r->add_option("--seed", ra.seed);
  r->add_option("--config", ra.config, "key = value file; flags override it");
  r->add_option("--out", ra.out, "report file (default stdout)");
  r->add_option("--format", ra.format)->check(CLI::IsMember({"csv", "json", "svg"}));
  r->add_option("--svg", ra.svg, "also write a log-log plot");
  r->callback([&] { status = run_rate_sweep(ra, *r); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
