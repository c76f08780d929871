#pragma once

// Convergence-rate sweeps over N: W1 and total variation between the bulk
// counting law and the sine counting law on [-s, s], the trace norm of the
// kernel difference, least-squares slopes in log-log coordinates, and
// report emission.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpplab/ensemble.hpp"

namespace dpplab::experiments {

struct SweepConfig {
  Ensemble ensemble = Ensemble::U;
  std::vector<int> n_values = {16, 32, 64, 128, 256};
  double s = 1.0;
  int grid_size = 80;
  std::uint64_t seed = 20240601;
  int mc_samples = 0;  // 0 disables the Monte Carlo cross-check

  // Throws DomainError unless N values are increasing, positive and satisfy
  // 2s/N < 1, and the ensemble is a group ensemble.
  void validate() const;
};

// Flat "key = value" text; '#' starts a comment. Keys: ensemble, n_list
// (comma separated), s, grid, seed, mc_samples. Unknown keys throw.
SweepConfig parse_sweep_config(std::istream& in, SweepConfig base = {});
SweepConfig load_sweep_config(const std::string& path, SweepConfig base = {});

std::vector<int> parse_int_list(const std::string& text);

// Right-hand side of the rate bound with its constant set to 1:
//   U:      N^2 max(s^2, s^3) / (N^4 - 16 s^4)
//   others: max(s, s^2) / N
double bound_shape(Ensemble ensemble, int n, double s);

// Upper bound on the trace norm of (bulk U kernel - sine kernel) on [-s, s]
// from the csc expansion: sum_k |c_{2k+1}| / N^{2k+2} times the per-term
// bound 8s(2 pi s)^{2k+1}(2 pi s/(4k+5) + (2k+2)/(4k+3)). Requires 2s/N < 1.
double cue_series_bound(int n, double s);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Ordinary least squares of log y on log x. Needs >= 3 points, all positive.
SlopeFit slope_fit(std::span<const double> xs, std::span<const double> ys);

struct McCheck {
  double tv = 0.0;
  double mean = 0.0;
  double mean_standard_error = 0.0;
  double exact_mean = 0.0;
};

struct RateRow {
  int n = 0;
  double w1 = 0.0;
  double dtv = 0.0;
  double trace_norm = 0.0;
  double bound_shape = 0.0;
  double ratio = 0.0;  // w1 / bound_shape
  std::optional<McCheck> mc;
};

struct RateReport {
  Ensemble ensemble = Ensemble::U;
  double s = 1.0;
  std::vector<RateRow> rows;
  SlopeFit w1_fit;
  SlopeFit tnorm_fit;
  std::vector<std::string> violations;  // failed invariant checks, empty when clean

  bool ok() const { return violations.empty(); }
};

RateReport rate_sweep(const SweepConfig& config);

enum class ReportFormat { csv, json, svg };

ReportFormat parse_report_format(const std::string& name);

// CSV columns: ensemble,N,s,w1,dtv,trace_norm,bound_shape,ratio
void emit_report(const RateReport& report, ReportFormat format, std::ostream& out);

// Writes to a file; throws std::runtime_error when it cannot be opened or written.
void write_report(const RateReport& report, ReportFormat format, const std::string& path);

}  // namespace dpplab::experiments
