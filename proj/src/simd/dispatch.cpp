#include <atomic>
#include <cassert>
#include <cstdlib>
#include <string>

#include "backends.hpp"
#include "dpplab/simd.hpp"

namespace dpplab::simd {
namespace {

using detail::KernelTable;

bool cpu_supports(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(DPPLAB_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(DPPLAB_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* table_for(Backend b) {
  switch (b) {
#if defined(DPPLAB_HAVE_AVX2)
    case Backend::Avx2: return &detail::kAvx2Table;
#endif
#if defined(DPPLAB_HAVE_NEON)
    case Backend::Neon: return &detail::kNeonTable;
#endif
    default: return &detail::kScalarTable;
  }
}

Backend detect() {
  if (const char* env = std::getenv("DPPLAB_SIMD")) {
    const std::string v(env);
    if (v == "scalar") return Backend::Scalar;
    if (v == "avx2" && cpu_supports(Backend::Avx2)) return Backend::Avx2;
    if (v == "neon" && cpu_supports(Backend::Neon)) return Backend::Neon;
    if (v != "auto") return Backend::Scalar;
  }
  if (cpu_supports(Backend::Avx2)) return Backend::Avx2;
  if (cpu_supports(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

struct State {
  std::atomic<Backend> backend;
  std::atomic<const KernelTable*> table;
  State() {
    const Backend b = detect();
    backend.store(b);
    table.store(table_for(b));
  }
};

State& state() {
  static State s;
  return s;
}

const KernelTable& active() { return *state().table.load(std::memory_order_relaxed); }

}  // namespace

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "?";
}

Backend active_backend() { return state().backend.load(); }

bool backend_available(Backend b) { return cpu_supports(b); }

bool set_backend(Backend b) {
  if (!cpu_supports(b)) return false;
  state().table.store(table_for(b));
  state().backend.store(b);
  return true;
}

double sum_squares(std::span<const double> x) { return active().sum_squares(x.data(), x.size()); }

double abs_sum(std::span<const double> x) { return active().abs_sum(x.data(), x.size()); }

double abs_diff_sum(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return active().abs_diff_sum(a.data(), b.data(), a.size());
}

void scale_symmetric(std::span<double> matrix, std::span<const double> d) {
  assert(matrix.size() == d.size() * d.size());
  active().scale_symmetric(matrix.data(), d.data(), d.size());
}

void bernoulli_step(std::span<const double> in, std::span<double> out, double p) {
  assert(!in.empty() && out.size() == in.size() + 1);
  active().bernoulli_step(in.data(), out.data(), in.size(), p);
}

namespace ref {
using detail::kScalarTable;

double sum_squares(std::span<const double> x) { return kScalarTable.sum_squares(x.data(), x.size()); }

double abs_sum(std::span<const double> x) { return kScalarTable.abs_sum(x.data(), x.size()); }

double abs_diff_sum(std::span<const double> a, std::span<const double> b) {
  return kScalarTable.abs_diff_sum(a.data(), b.data(), a.size());
}

void scale_symmetric(std::span<double> matrix, std::span<const double> d) {
  kScalarTable.scale_symmetric(matrix.data(), d.data(), d.size());
}

void bernoulli_step(std::span<const double> in, std::span<double> out, double p) {
  kScalarTable.bernoulli_step(in.data(), out.data(), in.size(), p);
}
}  // namespace ref

}  // namespace dpplab::simd
