#include "dpplab/opcalc.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "dpplab/error.hpp"
#include "dpplab/kernels.hpp"
#include "dpplab/simd.hpp"

namespace dpplab::opcalc {
namespace {

void require_same_grid(const DiscretizedOperator& a, const DiscretizedOperator& b) {
  if (a.grid_ptr() == b.grid_ptr()) return;
  if (!a.grid().same_as(b.grid())) throw MismatchError("operators live on different quadrature grids");
}

std::span<const double> view(const Eigen::MatrixXd& m) {
  return {m.data(), static_cast<std::size_t>(m.size())};
}

DecompositionResidual residual(const Eigen::MatrixXd& direct, const Eigen::MatrixXd& assembled) {
  const double max_abs = (direct - assembled).cwiseAbs().maxCoeff();
  const double scale = direct.cwiseAbs().maxCoeff();
  return {max_abs, scale > 0.0 ? max_abs / scale : max_abs};
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Discretized C_j and S_j for j = 0..max_j on one grid.
struct Blocks {
  std::vector<Eigen::MatrixXd> c;
  std::vector<Eigen::MatrixXd> s;

  Blocks(const GridPtr& grid, double half_width, int max_j) {
    for (int j = 0; j <= max_j; ++j) {
      c.push_back(discretize([=](double x, double y) { return kernels::cj_kernel(j, half_width, x, y); }, grid)
                      .matrix());
      s.push_back(discretize([=](double x, double y) { return kernels::sj_kernel(j, half_width, x, y); }, grid)
                      .matrix());
    }
  }
};

}  // namespace

DiscretizedOperator::DiscretizedOperator(GridPtr grid, Eigen::MatrixXd matrix)
    : grid_(std::move(grid)), matrix_(std::move(matrix)) {
  const auto n = static_cast<Eigen::Index>(grid_->size());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw MismatchError("matrix shape does not match grid size");
  }
}

bool DiscretizedOperator::is_symmetric(double rel_tol) const {
  const double scale = matrix_.cwiseAbs().maxCoeff();
  if (scale == 0.0) return true;
  return (matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

DiscretizedOperator DiscretizedOperator::operator+(const DiscretizedOperator& other) const {
  require_same_grid(*this, other);
  return {grid_, matrix_ + other.matrix_};
}

DiscretizedOperator DiscretizedOperator::operator-(const DiscretizedOperator& other) const {
  require_same_grid(*this, other);
  return {grid_, matrix_ - other.matrix_};
}

DiscretizedOperator DiscretizedOperator::operator*(double alpha) const { return {grid_, alpha * matrix_}; }

DiscretizedOperator discretize(const KernelFn& kernel, const GridPtr& grid) {
  const auto n = static_cast<Eigen::Index>(grid->size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double v = kernel(grid->nodes[i], grid->nodes[j]);
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "kernel is not finite at (" << grid->nodes[i] << ", " << grid->nodes[j] << ")";
        throw NumericalError(msg.str());
      }
      m(i, j) = v;
    }
  }
  std::vector<double> root_w(grid->weights.size());
  for (std::size_t i = 0; i < root_w.size(); ++i) root_w[i] = std::sqrt(grid->weights[i]);
  simd::scale_symmetric({m.data(), static_cast<std::size_t>(m.size())}, root_w);
  return {grid, std::move(m)};
}

DiscretizedOperator compose(const DiscretizedOperator& a, const DiscretizedOperator& b) {
  require_same_grid(a, b);
  return {a.grid_ptr(), a.matrix() * b.matrix()};
}

Eigen::VectorXd symmetric_eigenvalues(const DiscretizedOperator& op) {
  const Eigen::MatrixXd sym = 0.5 * (op.matrix() + op.matrix().transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed");
  return solver.eigenvalues();
}

double trace_norm(const DiscretizedOperator& op) {
  if (op.is_symmetric()) {
    const Eigen::VectorXd ev = symmetric_eigenvalues(op);
    return simd::abs_sum({ev.data(), static_cast<std::size_t>(ev.size())});
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(op.matrix());
  if (svd.info() != Eigen::Success) throw NumericalError("singular value decomposition failed");
  return svd.singularValues().sum();
}

double hs_norm(const DiscretizedOperator& op) { return std::sqrt(simd::sum_squares(view(op.matrix()))); }

double hs_norm_kernel(const KernelFn& kernel, const QuadratureGrid& grid) {
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double v = kernel(grid.nodes[i], grid.nodes[j]);
      acc += grid.weights[i] * grid.weights[j] * v * v;
    }
  }
  return std::sqrt(acc);
}

RefinedNorm trace_norm_checked(const KernelFn& kernel, double lo, double hi, int n, double rel_tol) {
  const double coarse = trace_norm(discretize(kernel, gauss_legendre(n, lo, hi)));
  const double fine = trace_norm(discretize(kernel, gauss_legendre(2 * n, lo, hi)));
  const double change = fine > 0.0 ? std::abs(coarse - fine) / fine : std::abs(coarse - fine);
  if (change > rel_tol) {
    std::ostringstream msg;
    msg << "trace norm not converged on [" << lo << ", " << hi << "]: n=" << n << " gives " << coarse
        << ", n=" << 2 * n << " gives " << fine << " (relative change " << change << " > " << rel_tol
        << "); increase the grid size";
    throw NumericalError(msg.str());
  }
  return {coarse, fine, change};
}

DecompositionResidual verify_decomposition_A(int k, double s, int n, bool prime) {
  if (k < 0) throw DomainError("verify_decomposition_A: k must be >= 0");
  const GridPtr grid = gauss_legendre(n, s);
  const int top = 2 * k + 2;
  const Blocks b(grid, s, top);

  Eigen::MatrixXd assembled = Eigen::MatrixXd::Zero(n, n);
  // (a - b)^{2k+2} cos(a - b) and (a + b)^{2k+2} cos(a + b), a = pi u x/s,
  // b = pi u y/s. cos(a + b) = cos a cos b - sin a sin b, so in the primed
  // case the S*S blocks keep a minus sign while all binomial signs drop.
  const double ss_sign = prime ? -1.0 : 1.0;
  for (int j = 0; j <= k + 1; ++j) {
    const double w = (prime || j % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(binomial(top, j));
    assembled += w * (b.c[j] * b.c[top - j] + ss_sign * b.s[j] * b.s[top - j]);
  }
  for (int j = 0; j <= k; ++j) {
    const double w = (prime || j % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(binomial(top, j));
    assembled += w * (b.c[top - j] * b.c[j] + ss_sign * b.s[top - j] * b.s[j]);
  }
  // (2k+2) (a -+ b)^{2k+1} sin(a -+ b)
  const int odd = 2 * k + 1;
  for (int j = 0; j <= k; ++j) {
    const double w = (prime || j % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(binomial(odd, j)) * top;
    const double cross = prime ? 1.0 : -1.0;
    assembled += w * (b.s[odd - j] * b.c[j] + b.c[j] * b.s[odd - j] +
                      cross * (b.c[odd - j] * b.s[j] + b.s[j] * b.c[odd - j]));
  }

  const KernelFn direct_kernel = prime ? KernelFn([k](double x, double y) { return kernels::a_prime_kernel(k, x, y); })
                                       : KernelFn([k](double x, double y) { return kernels::a_kernel(k, x, y); });
  return residual(discretize(direct_kernel, grid).matrix(), assembled);
}

K23Residuals verify_decomposition_K23(double s, int n) {
  const GridPtr grid = gauss_legendre(n, s);
  const Blocks b(grid, s, 1);
  const auto& c0 = b.c[0];
  const auto& c1 = b.c[1];
  const auto& s0 = b.s[0];
  const auto& s1 = b.s[1];

  const Eigen::MatrixXd k2 = c0 * c0 + s0 * s0 - c0 * s1 - s1 * c0 + s0 * c1 + c1 * s0;
  const Eigen::MatrixXd k3 = c0 * c0 - s0 * s0 - c0 * s1 - s1 * c0 - s0 * c1 - c1 * s0;

  constexpr double pi = std::numbers::pi;
  const auto d2 = discretize([](double x, double y) { return std::cos(pi * (x - y)); }, grid);
  const auto d3 = discretize([](double x, double y) { return std::cos(pi * (x + y)); }, grid);
  return {residual(d2.matrix(), k2), residual(d3.matrix(), k3)};
}

InequalityCheck cauchy_schwarz_check(const DiscretizedOperator& a, const DiscretizedOperator& b) {
  return {trace_norm(compose(a, b)), hs_norm(a) * hs_norm(b)};
}

InequalityCheck a_norm_bound_check(int k, double s, int n) {
  if (k < 0) throw DomainError("a_norm_bound_check: k must be >= 0");
  const auto op = discretize([k](double x, double y) { return kernels::a_kernel(k, x, y); }, gauss_legendre(n, s));
  constexpr double pi = std::numbers::pi;
  const double two_pi_s = 2.0 * pi * s;
  const double bound = 8.0 * s * std::pow(two_pi_s, 2 * k + 1) *
                       (two_pi_s / (4.0 * k + 5.0) + (2.0 * k + 2.0) / (4.0 * k + 3.0));
  return {trace_norm(op), bound};
}

BlockBoundCheck cs_block_bound_check(int j, double s, int n) {
  if (j < 0) throw DomainError("cs_block_bound_check: j must be >= 0");
  const GridPtr grid = gauss_legendre(n, s);
  const double mc = hs_norm(discretize([=](double x, double y) { return kernels::cj_kernel(j, s, x, y); }, grid));
  const double ms = hs_norm(discretize([=](double x, double y) { return kernels::sj_kernel(j, s, x, y); }, grid));
  const double bound = std::sqrt(2.0 * s) * std::pow(std::numbers::pi * s, j) / (2.0 * j + 1.0);
  return {mc, ms, bound};
}

}  // namespace dpplab::opcalc
