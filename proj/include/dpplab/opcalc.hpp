#pragma once

// Nystrom discretization of integral operators on an interval, their trace
// and Hilbert-Schmidt norms, and numerical checks of the C_j / S_j block
// decompositions and the norm inequalities built on them.
//
// An operator with kernel K on a grid (x_i, w_i) is represented by the matrix
// sqrt(w_i) K(x_i, x_j) sqrt(w_j). Products of such matrices discretize the
// composed kernel int K1(x, t) K2(t, y) dt with the same rule.

#include <Eigen/Dense>

#include <functional>

#include "dpplab/quadrature.hpp"

namespace dpplab::opcalc {

using KernelFn = std::function<double(double, double)>;

class DiscretizedOperator {
 public:
  DiscretizedOperator(GridPtr grid, Eigen::MatrixXd matrix);

  const QuadratureGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  Eigen::Index size() const { return matrix_.rows(); }

  double trace() const { return matrix_.trace(); }
  bool is_symmetric(double rel_tol = 1e-12) const;

  DiscretizedOperator operator+(const DiscretizedOperator& other) const;
  DiscretizedOperator operator-(const DiscretizedOperator& other) const;
  DiscretizedOperator operator*(double alpha) const;

 private:
  GridPtr grid_;
  Eigen::MatrixXd matrix_;
};

inline DiscretizedOperator operator*(double alpha, const DiscretizedOperator& op) { return op * alpha; }

// Throws NumericalError if the kernel is non-finite at any node pair.
DiscretizedOperator discretize(const KernelFn& kernel, const GridPtr& grid);

// Throws MismatchError when the operands live on different grids.
DiscretizedOperator compose(const DiscretizedOperator& a, const DiscretizedOperator& b);

// Sum of singular values; |eigenvalues| when the matrix is symmetric.
double trace_norm(const DiscretizedOperator& op);

// Frobenius norm of the weighted matrix.
double hs_norm(const DiscretizedOperator& op);

// sqrt(sum_ij w_i w_j K(x_i, x_j)^2), evaluated straight from the kernel.
double hs_norm_kernel(const KernelFn& kernel, const QuadratureGrid& grid);

// Eigenvalues (ascending) of a symmetric operator.
Eigen::VectorXd symmetric_eigenvalues(const DiscretizedOperator& op);

struct RefinedNorm {
  double value;          // at the requested size
  double refined;        // at twice the size
  double relative_change;
};

// Trace norm on an n-point grid over [lo, hi], confirmed against a 2n-point
// grid. Throws NumericalError when the relative change exceeds rel_tol.
RefinedNorm trace_norm_checked(const KernelFn& kernel, double lo, double hi, int n,
                               double rel_tol = 1e-6);

struct DecompositionResidual {
  double max_abs;   // max |direct - assembled| over matrix entries
  double relative;  // max_abs / max |direct|
};

// Assembles A_{2k+1} (or A'_{2k+1} when prime) from composed C_j / S_j
// blocks on an n-point grid over [-s, s] and compares with the direct
// discretization.
DecompositionResidual verify_decomposition_A(int k, double s, int n, bool prime);

struct K23Residuals {
  DecompositionResidual k2;  // cos(pi(x-y))
  DecompositionResidual k3;  // cos(pi(x+y))
};

K23Residuals verify_decomposition_K23(double s, int n);

struct InequalityCheck {
  double lhs;
  double rhs;
  bool holds(double rel_slack = 1e-10) const { return lhs <= rhs * (1.0 + rel_slack) + 1e-300; }
};

// ||ab||_1 against ||a||_2 ||b||_2.
InequalityCheck cauchy_schwarz_check(const DiscretizedOperator& a, const DiscretizedOperator& b);

// ||A_{2k+1}||_1 on [-s, s] against 8s(2 pi s)^{2k+1}(2 pi s/(4k+5) + (2k+2)/(4k+3)).
InequalityCheck a_norm_bound_check(int k, double s, int n = 80);

struct BlockBoundCheck {
  double measured_c;
  double measured_s;
  double bound;  // sqrt(2s) (pi s)^j / (2j+1)
  bool holds(double rel_slack = 1e-8) const {
    return measured_c <= bound * (1.0 + rel_slack) && measured_s <= bound * (1.0 + rel_slack);
  }
};

BlockBoundCheck cs_block_bound_check(int j, double s, int n = 80);

}  // namespace dpplab::opcalc
