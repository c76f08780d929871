#include "dpplab/counting.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "dpplab/error.hpp"
#include "dpplab/opcalc.hpp"
#include "dpplab/simd.hpp"

namespace dpplab::counting {
namespace {

void check_bulk_window(const kernels::KernelSpec& spec, Interval interval) {
  if (spec.ensemble == Ensemble::SINE || spec.scaling != kernels::Scaling::bulk) return;
  const double s = std::max(std::abs(interval.lo), std::abs(interval.hi));
  if (!(2.0 * s < spec.n)) {
    std::ostringstream msg;
    msg << "bulk restriction violated: 2s/N = " << 2.0 * s / spec.n << " >= 1";
    throw DomainError(msg.str());
  }
}

opcalc::KernelFn kernel_of(const kernels::KernelSpec& spec) {
  return [spec](double x, double y) { return kernels::evaluate(spec, x, y); };
}

SpectrumSummary summarize(const opcalc::DiscretizedOperator& op, double clamp_tol) {
  SpectrumSummary out;
  out.trace = op.trace();
  const Eigen::VectorXd ev = opcalc::symmetric_eigenvalues(op);
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  for (double& v : out.eigenvalues) {
    if (v < -clamp_tol || v > 1.0 + clamp_tol) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "eigenvalue " << v << " outside [" << -clamp_tol << ", " << 1.0 + clamp_tol
          << "]; the discretization is not a valid determinantal kernel";
      throw NumericalError(msg.str());
    }
    const double c = std::clamp(v, 0.0, 1.0);
    if (c != v) ++out.clamped_count;
    v = c;
  }
  return out;
}

}  // namespace

IntegerLaw::IntegerLaw(std::vector<double> pmf) : pmf_(std::move(pmf)) {
  if (pmf_.empty()) throw NumericalError("integer law needs at least one entry");
  double total = 0.0;
  for (std::size_t k = 0; k < pmf_.size(); ++k) {
    if (pmf_[k] < -1e-15 || !std::isfinite(pmf_[k])) {
      throw NumericalError("negative probability " + std::to_string(pmf_[k]) + " at k=" + std::to_string(k));
    }
    pmf_[k] = std::max(pmf_[k], 0.0);
    total += pmf_[k];
  }
  if (std::abs(total - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "probabilities sum to " << total;
    throw NumericalError(msg.str());
  }
}

IntegerLaw IntegerLaw::point_mass(std::size_t k) {
  std::vector<double> p(k + 1, 0.0);
  p[k] = 1.0;
  return IntegerLaw(std::move(p));
}

double IntegerLaw::mean() const {
  double m = 0.0;
  for (std::size_t k = 0; k < pmf_.size(); ++k) m += static_cast<double>(k) * pmf_[k];
  return m;
}

double IntegerLaw::variance() const {
  const double m = mean();
  double v = 0.0;
  for (std::size_t k = 0; k < pmf_.size(); ++k) {
    const double d = static_cast<double>(k) - m;
    v += d * d * pmf_[k];
  }
  return v;
}

IntegerLaw spectrum_to_law(std::span<const double> eigenvalues, double clamp_tol) {
  std::vector<double> cur{1.0};
  std::vector<double> next;
  cur.reserve(eigenvalues.size() + 1);
  next.reserve(eigenvalues.size() + 1);
  for (double lambda : eigenvalues) {
    if (!(lambda >= -clamp_tol && lambda <= 1.0 + clamp_tol)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "eigenvalue " << lambda << " outside the clamp band [" << -clamp_tol << ", "
          << 1.0 + clamp_tol << "]";
      throw NumericalError(msg.str());
    }
    const double p = std::clamp(lambda, 0.0, 1.0);
    if (p == 0.0) continue;
    next.resize(cur.size() + 1);
    simd::bernoulli_step(cur, next, p);
    cur.swap(next);
  }
  return IntegerLaw(std::move(cur));
}

double w1_integer(const IntegerLaw& a, const IntegerLaw& b) {
  const std::size_t len = std::max(a.support_size(), b.support_size());
  double fa = 0.0;
  double fb = 0.0;
  double acc = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    fa += a[k];
    fb += b[k];
    acc += std::abs(fa - fb);
  }
  return acc;
}

double tv_integer(const IntegerLaw& a, const IntegerLaw& b) {
  const std::size_t len = std::max(a.support_size(), b.support_size());
  std::vector<double> pa(len, 0.0);
  std::vector<double> pb(len, 0.0);
  std::copy(a.pmf().begin(), a.pmf().end(), pa.begin());
  std::copy(b.pmf().begin(), b.pmf().end(), pb.begin());
  return 0.5 * simd::abs_diff_sum(pa, pb);
}

CountLaw dpp_count_law(const kernels::KernelSpec& spec, Interval interval, int grid_size, double clamp_tol) {
  if (!(interval.hi > interval.lo)) return {IntegerLaw::point_mass(0), {}};
  check_bulk_window(spec, interval);
  const auto op = opcalc::discretize(kernel_of(spec), gauss_legendre(grid_size, interval.lo, interval.hi));
  SpectrumSummary spectrum = summarize(op, clamp_tol);
  IntegerLaw law = spectrum_to_law(spectrum.eigenvalues, clamp_tol);
  return {std::move(law), std::move(spectrum)};
}

ChainDetail chain_check_on(const kernels::KernelSpec& spec, Interval interval, int grid_size) {
  if (!(interval.hi > interval.lo)) throw DomainError("chain check needs a non-empty interval");
  check_bulk_window(spec, interval);
  const GridPtr grid = gauss_legendre(grid_size, interval.lo, interval.hi);
  const kernels::KernelSpec sine{Ensemble::SINE, spec.n, kernels::Scaling::bulk};
  const auto op = opcalc::discretize(kernel_of(spec), grid);
  const auto sine_op = opcalc::discretize(kernel_of(sine), grid);

  auto law = spectrum_to_law(summarize(op, kDefaultClampTol).eigenvalues);
  auto sine_law = spectrum_to_law(summarize(sine_op, kDefaultClampTol).eigenvalues);

  // Difference kernel evaluated pointwise, not as a difference of matrices,
  // so that cancellation happens once per entry.
  const opcalc::KernelFn diff = [spec, sine](double x, double y) {
    return kernels::evaluate(spec, x, y) - kernels::evaluate(sine, x, y);
  };
  const double tnorm = opcalc::trace_norm(opcalc::discretize(diff, grid));
  ChainCheck chain{tv_integer(law, sine_law), w1_integer(law, sine_law), tnorm};
  return {chain, std::move(law), std::move(sine_law)};
}

ChainCheck lemma31_chain_check(const kernels::KernelSpec& spec, double s, int grid_size) {
  return chain_check_on(spec, {-s, s}, grid_size).chain;
}

}  // namespace dpplab::counting
