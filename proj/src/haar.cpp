#include "dpplab/haar.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "dpplab/error.hpp"
#include "dpplab/parallel.hpp"

namespace dpplab::haar {
namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kTrivialTol = 1e-6;
constexpr int kMaxSymplecticAttempts = 10;

class Gaussian {
  static constexpr double kInvSqrt2 = 0.70710678118654752440;
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(derive_seed(seed, 0)) {}
  double real() { return dist_(rng_); }
  // Standard complex Gaussian, E|z|^2 = 1.
  Complex complex() { return {dist_(rng_) * kInvSqrt2, dist_(rng_) * kInvSqrt2}; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> dist_;
};

Eigen::MatrixXcd symplectic_form(int n) {
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n).setIdentity();
  j.bottomLeftCorner(n, n) = -Eigen::MatrixXcd::Identity(n, n);
  return j;
}

std::string describe(Ensemble e, int dim) {
  return std::string(to_string(e)) + " (dim " + std::to_string(dim) + ")";
}

// Q from a QR factorization with R's diagonal rotated onto the positive reals.
template <typename Matrix>
Matrix haar_q(const Matrix& z) {
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const auto& r = qr.matrixQR();
  for (Eigen::Index i = 0; i < z.cols(); ++i) {
    const auto d = r(i, i);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(i) *= d / mag;
  }
  return q;
}

}  // namespace

double unitarity_residual(const ComplexMatrix& u) {
  const auto n = u.rows();
  return (u.adjoint() * u - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

double symplectic_residual(const ComplexMatrix& u) {
  const int n = static_cast<int>(u.rows() / 2);
  const auto j = symplectic_form(n);
  return (u.transpose() * j * u - j).cwiseAbs().maxCoeff();
}

GroupElement::GroupElement(Ensemble ensemble, int n, ComplexMatrix entries)
    : ensemble_(ensemble), n_(n), entries_(std::move(entries)) {
  if (ensemble_ == Ensemble::SINE) throw DomainError("the sine process has no matrix realization");
  const int expected = matrix_dim(ensemble_, n_);
  if (entries_.rows() != expected || entries_.cols() != expected) {
    throw DomainError("matrix for " + describe(ensemble_, expected) + " has wrong shape");
  }
  if (const double r = unitarity_residual(entries_); r > 1e-10) {
    throw NumericalError("unitarity residual " + std::to_string(r) + " for " + describe(ensemble_, expected));
  }
  if (ensemble_ == Ensemble::SP) {
    if (const double r = symplectic_residual(entries_); r > 1e-8) {
      throw NumericalError("symplectic residual " + std::to_string(r));
    }
  } else if (ensemble_ != Ensemble::U) {
    if (entries_.imag().cwiseAbs().maxCoeff() > 1e-12) throw NumericalError("orthogonal sample is not real");
    const double det = entries_.real().determinant();
    const double want = (ensemble_ == Ensemble::SO_even || ensemble_ == Ensemble::SO_odd) ? 1.0 : -1.0;
    if (std::abs(det - want) > 1e-8) {
      throw NumericalError("determinant " + std::to_string(det) + " does not match " + describe(ensemble_, expected));
    }
  }
}

GroupElement sample_unitary(int n, std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_unitary: N must be >= 1");
  Gaussian g(seed);
  ComplexMatrix z(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) z(i, j) = g.complex();
  return {Ensemble::U, n, haar_q(z)};
}

GroupElement sample_orthogonal_coset(int dim, int det_sign, std::uint64_t seed) {
  if (dim < 1) throw DomainError("sample_orthogonal_coset: dimension must be >= 1");
  if (det_sign != 1 && det_sign != -1) throw DomainError("det_sign must be +1 or -1");
  const bool odd = dim % 2 == 1;
  const Ensemble tag = det_sign > 0 ? (odd ? Ensemble::SO_odd : Ensemble::SO_even)
                                    : (odd ? Ensemble::SOminus_odd : Ensemble::SOminus_even);
  if (tag == Ensemble::SOminus_even && dim < 2) throw DomainError("SO^-(dim) needs dim >= 2");

  Gaussian g(seed);
  Eigen::MatrixXd z(dim, dim);
  for (;;) {
    for (Eigen::Index j = 0; j < dim; ++j)
      for (Eigen::Index i = 0; i < dim; ++i) z(i, j) = g.real();
    Eigen::MatrixXd q = haar_q(z);
    if ((q.determinant() > 0.0) == (det_sign > 0)) {
      return {tag, row_parameter(tag, dim), q.cast<Complex>()};
    }
  }
}

GroupElement sample_symplectic(int n, std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_symplectic: N must be >= 1");
  Gaussian g(seed);
  const Eigen::Index m = 2 * n;
  for (int attempt = 0; attempt < kMaxSymplecticAttempts; ++attempt) {
    // Columns are processed in pairs (v, Jv-conjugate): for v = (p; q) its
    // partner is (-conj(q); conj(p)). Orthonormalizing v against all earlier
    // pairs and appending both keeps the [[A, B], [-conj(B), conj(A)]] form.
    ComplexMatrix u(m, m);
    bool ok = true;
    for (Eigen::Index col = 0; col < n && ok; ++col) {
      Eigen::VectorXcd v(m);
      for (Eigen::Index i = 0; i < m; ++i) v(i) = g.complex();
      const double initial = v.norm();
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index k = 0; k < col; ++k) {
          v -= u.col(k) * u.col(k).dot(v);
          v -= u.col(k + n) * u.col(k + n).dot(v);
        }
      }
      const double len = v.norm();
      if (!(len > 1e-8 * initial)) {
        ok = false;
        break;
      }
      v /= len;
      u.col(col) = v;
      Eigen::VectorXcd partner(m);
      partner.head(n) = -v.tail(n).conjugate();
      partner.tail(n) = v.head(n).conjugate();
      u.col(col + n) = partner;
    }
    if (ok) return {Ensemble::SP, n, std::move(u)};
  }
  throw NumericalError("symplectic orthonormalization broke down on " +
                       std::to_string(kMaxSymplecticAttempts) + " consecutive samples");
}

GroupElement sample(Ensemble ensemble, int n, std::uint64_t seed) {
  switch (ensemble) {
    case Ensemble::U: return sample_unitary(n, seed);
    case Ensemble::SO_even: return sample_orthogonal_coset(2 * n, +1, seed);
    case Ensemble::SO_odd: return sample_orthogonal_coset(2 * n + 1, +1, seed);
    case Ensemble::SOminus_odd: return sample_orthogonal_coset(2 * n + 1, -1, seed);
    case Ensemble::SOminus_even: return sample_orthogonal_coset(2 * n + 2, -1, seed);
    case Ensemble::SP: return sample_symplectic(n, seed);
    case Ensemble::SINE: break;
  }
  throw DomainError("the sine process cannot be sampled as a matrix");
}

Eigen::VectorXcd eigenvalues(const GroupElement& g) {
  if (g.ensemble() == Ensemble::U || g.ensemble() == Ensemble::SP) {
    // Unitary matrices are normal, so the Schur form is diagonal.
    Eigen::ComplexSchur<ComplexMatrix> schur(g.entries(), false);
    if (schur.info() != Eigen::Success) throw NumericalError("complex Schur decomposition failed");
    return schur.matrixT().diagonal();
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(g.entries().real(), false);
  if (solver.info() != Eigen::Success) throw NumericalError("real eigensolver failed");
  return solver.eigenvalues();
}

AngleSample eigenangles(const GroupElement& g) {
  std::vector<Complex> ev;
  {
    const Eigen::VectorXcd raw = eigenvalues(g);
    ev.assign(raw.data(), raw.data() + raw.size());
  }

  auto remove_nearest = [&ev](double target) {
    auto it = std::min_element(ev.begin(), ev.end(), [target](const Complex& a, const Complex& b) {
      return std::abs(a - target) < std::abs(b - target);
    });
    const double dist = std::abs(*it - target);
    if (dist > kTrivialTol) {
      std::ostringstream msg;
      msg << "trivial eigenvalue " << target << " missing: nearest eigenvalue is at distance " << dist;
      throw NumericalError(msg.str());
    }
    ev.erase(it);
  };

  switch (g.ensemble()) {
    case Ensemble::SO_odd: remove_nearest(1.0); break;
    case Ensemble::SOminus_odd: remove_nearest(-1.0); break;
    case Ensemble::SOminus_even:
      remove_nearest(1.0);
      remove_nearest(-1.0);
      break;
    default: break;
  }

  AngleSample out{g.ensemble(), g.n(), {}};
  if (g.ensemble() == Ensemble::U) {
    for (const auto& z : ev) {
      double theta = std::arg(z);
      if (theta < 0.0) theta += 2.0 * kPi;
      if (theta >= 2.0 * kPi) theta = 0.0;
      out.angles.push_back(theta);
    }
  } else {
    // Conjugate pairs: sort |arg| and average each adjacent pair.
    std::vector<double> mags;
    mags.reserve(ev.size());
    for (const auto& z : ev) mags.push_back(std::abs(std::arg(z)));
    std::sort(mags.begin(), mags.end());
    for (std::size_t i = 0; i + 1 < mags.size(); i += 2) out.angles.push_back(0.5 * (mags[i] + mags[i + 1]));
  }
  std::sort(out.angles.begin(), out.angles.end());
  if (static_cast<int>(out.angles.size()) != g.n()) {
    throw NumericalError("expected " + std::to_string(g.n()) + " nontrivial eigenangles, found " +
                         std::to_string(out.angles.size()));
  }
  return out;
}

std::vector<double> bulk_rescale(const AngleSample& sample) {
  std::vector<double> out;
  out.reserve(sample.angles.size());
  const double nn = sample.n;
  for (double theta : sample.angles) {
    out.push_back(sample.ensemble == Ensemble::U ? nn * (theta - kPi) / (2.0 * kPi)
                                                 : nn * (theta - 0.5 * kPi) / kPi);
  }
  return out;
}

McCountLaw mc_count_law(Ensemble ensemble, int n, counting::Interval interval, int num_samples,
                        std::uint64_t seed) {
  if (num_samples < 1) throw DomainError("mc_count_law: need at least one sample");
  const double half = 0.5 * n;
  if (interval.hi > interval.lo && !(interval.lo > -half && interval.hi < half)) {
    throw DomainError("mc_count_law: interval must lie inside (-N/2, N/2)");
  }

  std::vector<int> counts(static_cast<std::size_t>(num_samples), 0);
  if (interval.hi > interval.lo) {
    parallel_for(counts.size(), [&](std::size_t i) {
      const auto g = sample(ensemble, n, derive_seed(seed, i));
      const auto xs = bulk_rescale(eigenangles(g));
      counts[i] = static_cast<int>(std::count_if(
          xs.begin(), xs.end(), [&](double x) { return x >= interval.lo && x <= interval.hi; }));
    });
  }

  const int top = *std::max_element(counts.begin(), counts.end());
  std::vector<double> pmf(static_cast<std::size_t>(top) + 1, 0.0);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int c : counts) {
    pmf[static_cast<std::size_t>(c)] += 1.0;
    sum += c;
    sum_sq += static_cast<double>(c) * c;
  }
  const double m = num_samples;
  for (double& p : pmf) p /= m;

  McCountLaw out;
  out.samples = num_samples;
  out.mean = sum / m;
  out.variance = num_samples > 1 ? (sum_sq - m * out.mean * out.mean) / (m - 1.0) : 0.0;
  out.mean_standard_error = std::sqrt(out.variance / m);
  for (double p : pmf) out.pmf_standard_errors.push_back(std::sqrt(p * (1.0 - p) / m));
  // Normalize exactly before handing to the validating constructor.
  double total = 0.0;
  for (double p : pmf) total += p;
  for (double& p : pmf) p /= total;
  out.law = counting::IntegerLaw(std::move(pmf));
  return out;
}

}  // namespace dpplab::haar
