#include <arm_neon.h>

#include <cmath>

#include "backends.hpp"

namespace dpplab::simd::detail {
namespace {

double sum_squares(const double* x, std::size_t n) {
  float64x2_t acc2 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vld1q_f64(x + i);
    acc2 = vfmaq_f64(acc2, v, v);
  }
  double acc = vaddvq_f64(acc2);
  for (; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double abs_sum(const double* x, std::size_t n) {
  float64x2_t acc2 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc2 = vaddq_f64(acc2, vabsq_f64(vld1q_f64(x + i)));
  double acc = vaddvq_f64(acc2);
  for (; i < n; ++i) acc += std::abs(x[i]);
  return acc;
}

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
  float64x2_t acc2 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc2 = vaddq_f64(acc2, vabdq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  double acc = vaddvq_f64(acc2);
  for (; i < n; ++i) acc += std::abs(a[i] - b[i]);
  return acc;
}

void scale_symmetric(double* m, const double* d, std::size_t rows) {
  for (std::size_t j = 0; j < rows; ++j) {
    double* col = m + j * rows;
    const float64x2_t dj = vdupq_n_f64(d[j]);
    std::size_t i = 0;
    for (; i + 2 <= rows; i += 2) {
      const float64x2_t f = vmulq_f64(vld1q_f64(d + i), dj);
      vst1q_f64(col + i, vmulq_f64(vld1q_f64(col + i), f));
    }
    for (; i < rows; ++i) col[i] *= d[i] * d[j];
  }
}

void bernoulli_step(const double* in, double* out, std::size_t n, double p) {
  const double q = 1.0 - p;
  const float64x2_t vp = vdupq_n_f64(p);
  const float64x2_t vq = vdupq_n_f64(q);
  out[0] = q * in[0];
  std::size_t k = 1;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t r = vmulq_f64(vp, vld1q_f64(in + k - 1));
    vst1q_f64(out + k, vfmaq_f64(r, vq, vld1q_f64(in + k)));
  }
  for (; k < n; ++k) out[k] = q * in[k] + p * in[k - 1];
  out[n] = p * in[n - 1];
}

}  // namespace

const KernelTable kNeonTable = {sum_squares, abs_sum, abs_diff_sum, scale_symmetric,
                                bernoulli_step};

}  // namespace dpplab::simd::detail
