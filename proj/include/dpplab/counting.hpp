#pragma once

// Laws of counting numbers of a determinantal process restricted to an
// interval. The restricted operator's eigenvalues are the success
// probabilities of independent Bernoulli variables whose sum is the count,
// so the law is Poisson-binomial.

#include <span>
#include <vector>

#include "dpplab/kernels.hpp"

namespace dpplab::counting {

inline constexpr double kDefaultClampTol = 1e-8;

// Probability mass function on {0, 1, 2, ...}.
class IntegerLaw {
 public:
  IntegerLaw() : pmf_{1.0} {}

  // Entries >= -1e-15 are clamped to zero; anything more negative, or a
  // total farther than 1e-10 from one, throws NumericalError.
  explicit IntegerLaw(std::vector<double> pmf);

  static IntegerLaw point_mass(std::size_t k);

  const std::vector<double>& pmf() const { return pmf_; }
  std::size_t support_size() const { return pmf_.size(); }
  double operator[](std::size_t k) const { return k < pmf_.size() ? pmf_[k] : 0.0; }

  double mean() const;
  double variance() const;

 private:
  std::vector<double> pmf_;
};

struct SpectrumSummary {
  std::vector<double> eigenvalues;  // clamped into [0, 1], ascending
  double trace = 0.0;               // trace of the discretized operator
  int clamped_count = 0;            // entries moved by the clamp
};

// Poisson-binomial law by iterated convolution. Every eigenvalue must lie
// in [-clamp_tol, 1 + clamp_tol]; violations throw NumericalError naming
// the value.
IntegerLaw spectrum_to_law(std::span<const double> eigenvalues, double clamp_tol = kDefaultClampTol);

// sum_k |F_a(k) - F_b(k)|
double w1_integer(const IntegerLaw& a, const IntegerLaw& b);

// (1/2) sum_k |p_k - q_k|
double tv_integer(const IntegerLaw& a, const IntegerLaw& b);

struct Interval {
  double lo;
  double hi;
};

struct CountLaw {
  IntegerLaw law;
  SpectrumSummary spectrum;
};

// Count law of the process with this kernel on [lo, hi], from an n-point
// Nystrom discretization. Bulk specs require 2s/N < 1 with s = max(|lo|, |hi|).
CountLaw dpp_count_law(const kernels::KernelSpec& spec, Interval interval, int grid_size,
                       double clamp_tol = kDefaultClampTol);

struct ChainCheck {
  double dtv;
  double w1;
  double tnorm;
  bool holds(double slack = 1e-9) const { return dtv <= w1 + slack && w1 <= tnorm + slack; }
};

// d_TV, W1 between the counting laws of spec and of the sine process on
// [-s, s], and the trace norm of the operator difference, all on one grid.
ChainCheck lemma31_chain_check(const kernels::KernelSpec& spec, double s, int grid_size);

struct ChainDetail {
  ChainCheck chain;
  IntegerLaw law;       // spec's counting law
  IntegerLaw sine_law;  // sine counting law on the same interval
};

// Same comparison on an arbitrary sub-interval, keeping both laws.
ChainDetail chain_check_on(const kernels::KernelSpec& spec, Interval interval, int grid_size);

}  // namespace dpplab::counting
