// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "backends.hpp"

namespace dpplab::simd::detail {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline __m256d vabs(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

double sum_squares(const double* x, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d v0 = _mm256_loadu_pd(x + i);
    const __m256d v1 = _mm256_loadu_pd(x + i + 4);
    a0 = _mm256_fmadd_pd(v0, v0, a0);
    a1 = _mm256_fmadd_pd(v1, v1, a1);
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    a0 = _mm256_fmadd_pd(v, v, a0);
  }
  double acc = hsum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double abs_sum(const double* x, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = _mm256_add_pd(a0, vabs(_mm256_loadu_pd(x + i)));
    a1 = _mm256_add_pd(a1, vabs(_mm256_loadu_pd(x + i + 4)));
  }
  for (; i + 4 <= n; i += 4) a0 = _mm256_add_pd(a0, vabs(_mm256_loadu_pd(x + i)));
  double acc = hsum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) acc += std::abs(x[i]);
  return acc;
}

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
  __m256d acc4 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc4 = _mm256_add_pd(acc4, vabs(d));
  }
  double acc = hsum(acc4);
  for (; i < n; ++i) acc += std::abs(a[i] - b[i]);
  return acc;
}

void scale_symmetric(double* m, const double* d, std::size_t rows) {
  for (std::size_t j = 0; j < rows; ++j) {
    double* col = m + j * rows;
    const __m256d dj = _mm256_set1_pd(d[j]);
    std::size_t i = 0;
    for (; i + 4 <= rows; i += 4) {
      const __m256d f = _mm256_mul_pd(_mm256_loadu_pd(d + i), dj);
      _mm256_storeu_pd(col + i, _mm256_mul_pd(_mm256_loadu_pd(col + i), f));
    }
    for (; i < rows; ++i) col[i] *= d[i] * d[j];
  }
}

void bernoulli_step(const double* in, double* out, std::size_t n, double p) {
  const double q = 1.0 - p;
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vq = _mm256_set1_pd(q);
  out[0] = q * in[0];
  std::size_t k = 1;
  for (; k + 4 <= n; k += 4) {
    const __m256d cur = _mm256_loadu_pd(in + k);
    const __m256d prev = _mm256_loadu_pd(in + k - 1);
    _mm256_storeu_pd(out + k, _mm256_fmadd_pd(vq, cur, _mm256_mul_pd(vp, prev)));
  }
  for (; k < n; ++k) out[k] = q * in[k] + p * in[k - 1];
  out[n] = p * in[n - 1];
}

}  // namespace

const KernelTable kAvx2Table = {sum_squares, abs_sum, abs_diff_sum, scale_symmetric,
                                bernoulli_step};

}  // namespace dpplab::simd::detail
