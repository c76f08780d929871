#include <cmath>

#include "backends.hpp"

namespace dpplab::simd::detail {
namespace {

double sum_squares(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double abs_sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::abs(x[i]);
  return acc;
}

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::abs(a[i] - b[i]);
  return acc;
}

void scale_symmetric(double* m, const double* d, std::size_t rows) {
  for (std::size_t j = 0; j < rows; ++j) {
    double* col = m + j * rows;
    const double dj = d[j];
    for (std::size_t i = 0; i < rows; ++i) col[i] *= d[i] * dj;
  }
}

void bernoulli_step(const double* in, double* out, std::size_t n, double p) {
  const double q = 1.0 - p;
  out[0] = q * in[0];
  for (std::size_t k = 1; k < n; ++k) out[k] = q * in[k] + p * in[k - 1];
  out[n] = p * in[n - 1];
}

}  // namespace

const KernelTable kScalarTable = {sum_squares, abs_sum, abs_diff_sum, scale_symmetric,
                                  bernoulli_step};

}  // namespace dpplab::simd::detail
