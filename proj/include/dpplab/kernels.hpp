#pragma once

// Pointwise kernels of the eigenangle processes and of the operator blocks
// used to bound their differences.
//
// Raw kernels live on [0, 2pi) (U) or [0, pi) (paired ensembles). Bulk
// kernels are recentred and rescaled to unit mean spacing:
//   U:      (2pi/N) K(2pi x/N + pi,  2pi y/N + pi)
//   others: (pi/N)  K(pi x/N + pi/2, pi y/N + pi/2)
// and are defined for |x|, |y| < N/2.

#include "dpplab/ensemble.hpp"

namespace dpplab::kernels {

enum class Scaling { raw, bulk };

struct KernelSpec {
  Ensemble ensemble = Ensemble::SINE;
  int n = 1;  // row parameter; ignored for SINE
  Scaling scaling = Scaling::bulk;
};

// sin(Nx/2) / sin(x/2), continuous through the zeros of sin(x/2).
double dirichlet_ratio(int n, double x);

// Raw kernel K_N(x, y). Throws DomainError outside the row's domain.
double ensemble_kernel(const KernelSpec& spec, double x, double y);

// Bulk-scaled kernel. Throws DomainError unless |x|, |y| < N/2.
double bulk_kernel(const KernelSpec& spec, double x, double y);

// Dispatches on spec.scaling. SINE evaluates the sine kernel either way.
double evaluate(const KernelSpec& spec, double x, double y);

// sin(pi(x-y)) / (pi(x-y)), 1 on the diagonal.
double sine_kernel(double x, double y);

// cos(pi x y/s) (pi x y/s)^j / sqrt(2s)
double cj_kernel(int j, double s, double x, double y);
// sin(pi x y/s) (pi x y/s)^j / sqrt(2s)
double sj_kernel(int j, double s, double x, double y);

// (pi(x-y))^{2k+1} sin(pi(x-y))
double a_kernel(int k, double x, double y);
// (pi(x+y))^{2k+1} sin(pi(x+y))
double a_prime_kernel(int k, double x, double y);

// SO(2N) bulk kernel = k1 - k2 - (-1)^N k3 - (-1)^N k4.
struct SoEvenSplit {
  double k1;  // sin(pi(x-y)) cot(pi(x-y)/2N) / 2N
  double k2;  // cos(pi(x-y)) / 2N
  double k3;  // cos(pi(x+y)) / 2N
  double k4;  // sin(pi(x+y)) tan(pi(x+y)/2N) / 2N

  double recombine(int n) const {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return k1 - k2 - sign * k3 - sign * k4;
  }
};

SoEvenSplit so_even_bulk_split(int n, double x, double y);

// Truncated csc expansion of bulk U minus sine:
//   sum_{k<=k_max} c_{2k+1} (pi(x-y))^{2k+1} sin(pi(x-y)) / N^{2k+2}.
// Requires |x - y| < N and k_max >= 0.
double cue_difference_series(int n, int k_max, double x, double y);

}  // namespace dpplab::kernels
