#pragma once

// Internal: per-backend implementations behind the dispatch table.

#include <cstddef>

namespace dpplab::simd::detail {

struct KernelTable {
  double (*sum_squares)(const double* x, std::size_t n);
  double (*abs_sum)(const double* x, std::size_t n);
  double (*abs_diff_sum)(const double* a, const double* b, std::size_t n);
  void (*scale_symmetric)(double* m, const double* d, std::size_t rows);
  void (*bernoulli_step)(const double* in, double* out, std::size_t n, double p);
};

extern const KernelTable kScalarTable;
#if defined(DPPLAB_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
#if defined(DPPLAB_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif

}  // namespace dpplab::simd::detail
