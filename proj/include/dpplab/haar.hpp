#pragma once

// Haar-distributed samples from U(N), the determinant cosets of O(N), and
// Sp(2N); nontrivial eigenangle extraction; empirical counting laws.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

#include "dpplab/counting.hpp"
#include "dpplab/ensemble.hpp"

namespace dpplab::haar {

using ComplexMatrix = Eigen::MatrixXcd;

class GroupElement {
 public:
  // Checks the group invariants for the ensemble tag (unitarity, reality
  // and determinant sign, symplectic form) and throws NumericalError when
  // one fails. n is the row parameter.
  GroupElement(Ensemble ensemble, int n, ComplexMatrix entries);

  Ensemble ensemble() const { return ensemble_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(entries_.rows()); }
  const ComplexMatrix& entries() const { return entries_; }

 private:
  Ensemble ensemble_;
  int n_;
  ComplexMatrix entries_;
};

// max |U*U - I|
double unitarity_residual(const ComplexMatrix& u);

// max |U^T J U - J| with J = [[0, I], [-I, 0]]
double symplectic_residual(const ComplexMatrix& u);

GroupElement sample_unitary(int n, std::uint64_t seed);

// Haar on O(dim) conditioned on det = det_sign (+1 or -1), by rejection.
GroupElement sample_orthogonal_coset(int dim, int det_sign, std::uint64_t seed);

// Haar on Sp(2n) from a quaternionic Gaussian matrix.
GroupElement sample_symplectic(int n, std::uint64_t seed);

// Dispatch on ensemble with row parameter n.
GroupElement sample(Ensemble ensemble, int n, std::uint64_t seed);

struct AngleSample {
  Ensemble ensemble;
  int n;
  std::vector<double> angles;  // ascending; [0, 2pi) for U, (0, pi) otherwise
};

// Nontrivial eigenangles. Trivial eigenvalues (+1 for SO_odd, -1 for
// SOminus_odd, both for SOminus_even) are removed by nearest selection;
// one farther than 1e-6 from its target throws NumericalError.
AngleSample eigenangles(const GroupElement& g);

// Raw eigenvalues of g.
Eigen::VectorXcd eigenvalues(const GroupElement& g);

// U: N(theta - pi)/(2 pi); others: N(theta - pi/2)/pi.
std::vector<double> bulk_rescale(const AngleSample& sample);

struct McCountLaw {
  counting::IntegerLaw law;
  double mean = 0.0;
  double variance = 0.0;
  double mean_standard_error = 0.0;
  std::vector<double> pmf_standard_errors;
  int samples = 0;
};

// Empirical law of the number of bulk-rescaled nontrivial eigenangles in
// [lo, hi]. Sample i uses stream derive_seed(seed, i), so results do not
// depend on the thread count.
McCountLaw mc_count_law(Ensemble ensemble, int n, counting::Interval interval, int num_samples,
                        std::uint64_t seed);

}  // namespace dpplab::haar
