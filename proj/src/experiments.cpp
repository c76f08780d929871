#include "dpplab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "dpplab/counting.hpp"
#include "dpplab/error.hpp"
#include "dpplab/haar.hpp"
#include "dpplab/opcalc.hpp"
#include "dpplab/parallel.hpp"
#include "dpplab/series.hpp"

namespace dpplab::experiments {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void SweepConfig::validate() const {
  if (ensemble == Ensemble::SINE) throw DomainError("rate sweep needs a group ensemble, not SINE");
  if (!(s > 0.0)) throw DomainError("s must be positive");
  if (grid_size < 1) throw DomainError("grid size must be positive");
  if (mc_samples < 0) throw DomainError("mc_samples must be >= 0");
  if (n_values.empty()) throw DomainError("empty N list");
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 1) throw DomainError("N values must be positive");
    if (i > 0 && n_values[i] <= n_values[i - 1]) throw DomainError("N values must be strictly increasing");
    if (!(2.0 * s < n_values[i])) {
      throw DomainError("bulk restriction 2s/N < 1 fails at N = " + std::to_string(n_values[i]));
    }
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw DomainError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

SweepConfig parse_sweep_config(std::istream& in, SweepConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    std::replace(key.begin(), key.end(), '-', '_');
    try {
      if (key == "ensemble") {
        base.ensemble = parse_ensemble(value);
      } else if (key == "n_list") {
        base.n_values = parse_int_list(value);
      } else if (key == "s") {
        base.s = std::stod(value);
      } else if (key == "grid") {
        base.grid_size = std::stoi(value);
      } else if (key == "seed") {
        base.seed = std::stoull(value);
      } else if (key == "mc_samples") {
        base.mc_samples = std::stoi(value);
      } else {
        throw DomainError("unknown key '" + key + "'");
      }
    } catch (const DomainError& e) {
      throw DomainError("config line " + std::to_string(lineno) + ": " + e.what());
    } catch (const std::exception&) {
      throw DomainError("config line " + std::to_string(lineno) + ": bad value for " + key);
    }
  }
  return base;
}

SweepConfig load_sweep_config(const std::string& path, SweepConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  return parse_sweep_config(in, std::move(base));
}

double bound_shape(Ensemble ensemble, int n, double s) {
  if (!(2.0 * s < n)) throw DomainError("bound_shape: bulk restriction 2s/N < 1 violated");
  const double nn = n;
  if (ensemble == Ensemble::U) {
    const double n2 = nn * nn;
    return n2 * std::max(s * s, s * s * s) / (n2 * n2 - 16.0 * s * s * s * s);
  }
  if (ensemble == Ensemble::SINE) throw DomainError("bound_shape: no bound for the sine process itself");
  return std::max(s, s * s) / nn;
}

double cue_series_bound(int n, double s) {
  if (!(2.0 * s < n)) throw DomainError("cue_series_bound: bulk restriction 2s/N < 1 violated");
  static const series::CoeffTable csc(series::CoeffKind::csc, 400);
  const double two_pi_s = 2.0 * std::numbers::pi * s;
  const double nn = n;
  double total = 0.0;
  for (unsigned k = 0; k < csc.size(); ++k) {
    const double kk = k;
    const double per_term = 8.0 * s * std::pow(two_pi_s, 2.0 * kk + 1.0) *
                            (two_pi_s / (4.0 * kk + 5.0) + (2.0 * kk + 2.0) / (4.0 * kk + 3.0));
    const double term = std::abs(csc[k].value) * per_term / std::pow(nn, 2.0 * kk + 2.0);
    total += term;
    if (term < 1e-17 * total) return total;
  }
  throw NumericalError("cue_series_bound: series did not converge within the tabulated terms");
}

SlopeFit slope_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DomainError("slope_fit: length mismatch");
  if (xs.size() < 3) throw DomainError("slope_fit: need at least 3 points");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) throw DomainError("slope_fit: inputs must be positive");
    lx.push_back(std::log(xs[i]));
    ly.push_back(std::log(ys[i]));
  }
  const double m = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw DomainError("slope_fit: x values are all equal");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  // A flat response is fitted perfectly by slope 0.
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

RateReport rate_sweep(const SweepConfig& config) {
  config.validate();
  RateReport report;
  report.ensemble = config.ensemble;
  report.s = config.s;
  report.rows.resize(config.n_values.size());

  const counting::Interval interval{-config.s, config.s};
  parallel_for(config.n_values.size(), [&](std::size_t i) {
    const int n = config.n_values[i];
    const kernels::KernelSpec spec{config.ensemble, n, kernels::Scaling::bulk};
    const auto chain = counting::lemma31_chain_check(spec, config.s, config.grid_size);
    // Confirms the grid resolves the difference operator before it is reported.
    const kernels::KernelSpec sine{Ensemble::SINE, n, kernels::Scaling::bulk};
    opcalc::trace_norm_checked(
        [&](double x, double y) { return kernels::evaluate(spec, x, y) - kernels::evaluate(sine, x, y); },
        -config.s, config.s, config.grid_size);

    RateRow row;
    row.n = n;
    row.w1 = chain.w1;
    row.dtv = chain.dtv;
    row.trace_norm = chain.tnorm;
    row.bound_shape = bound_shape(config.ensemble, n, config.s);
    row.ratio = row.w1 / row.bound_shape;
    if (config.mc_samples > 0) {
      const auto exact = counting::dpp_count_law(spec, interval, config.grid_size);
      const auto mc = haar::mc_count_law(config.ensemble, n, interval, config.mc_samples,
                                         derive_seed(config.seed, static_cast<std::uint64_t>(n)));
      row.mc = McCheck{counting::tv_integer(mc.law, exact.law), mc.mean, mc.mean_standard_error,
                       exact.law.mean()};
    }
    report.rows[i] = row;
  });

  std::vector<double> ns, w1s, tns;
  for (const auto& r : report.rows) {
    ns.push_back(r.n);
    w1s.push_back(r.w1);
    tns.push_back(r.trace_norm);
  }

  auto flag = [&report](const std::string& what) { report.violations.push_back(what); };
  for (const auto& r : report.rows) {
    const counting::ChainCheck chain{r.dtv, r.w1, r.trace_norm};
    if (!chain.holds()) flag("N=" + std::to_string(r.n) + ": d_TV <= W1 <= trace norm fails");
  }
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    if (!(report.rows[i].trace_norm < report.rows[i - 1].trace_norm)) {
      flag("trace norm does not decrease from N=" + std::to_string(report.rows[i - 1].n) + " to N=" +
           std::to_string(report.rows[i].n));
    }
  }
  for (const auto& r : report.rows) {
    if (r.mc && std::abs(r.mc->mean - r.mc->exact_mean) > 4.0 * r.mc->mean_standard_error) {
      flag("N=" + std::to_string(r.n) + ": Monte Carlo mean is more than 4 standard errors from the exact mean");
    }
  }
  if (report.rows.size() >= 2 && report.rows.back().ratio > 2.0 * report.rows.front().ratio) {
    flag("W1 / bound shape grows: last ratio exceeds twice the first");
  }
  if (report.rows.size() >= 3) {
    const bool positive = std::all_of(w1s.begin(), w1s.end(), [](double v) { return v > 0.0; });
    if (positive) {
      report.w1_fit = slope_fit(ns, w1s);
    } else {
      flag("W1 vanished at some N; slope not fitted");
    }
    report.tnorm_fit = slope_fit(ns, tns);
  }
  return report;
}

}  // namespace dpplab::experiments
