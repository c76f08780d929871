#pragma once

// Data-parallel inner loops used by the operator and counting code. Each
// routine has a scalar reference implementation and, where the target has
// one, a vector implementation selected once at runtime.

#include <cstddef>
#include <span>
#include <string_view>

namespace dpplab::simd {

enum class Backend { Scalar, Avx2, Neon };

std::string_view to_string(Backend b);

// Backend chosen at first use: DPPLAB_SIMD=scalar|avx2|neon forces one
// (falling back to scalar when unsupported); otherwise the widest backend
// the CPU reports.
Backend active_backend();

// True when the backend was compiled in and the running CPU supports it.
bool backend_available(Backend b);

// Switches the dispatched backend. Returns false (and changes nothing)
// when the backend is unavailable. Intended for tests and benchmarks.
bool set_backend(Backend b);

// sum_i x_i^2
double sum_squares(std::span<const double> x);

// sum_i |x_i|
double abs_sum(std::span<const double> x);

// sum_i |a_i - b_i|, a and b of equal length
double abs_diff_sum(std::span<const double> a, std::span<const double> b);

// m(i, j) *= d_i * d_j for a column-major rows x rows matrix.
void scale_symmetric(std::span<double> matrix, std::span<const double> d);

// One Bernoulli(p) convolution step of a probability vector:
// out[k] = (1-p) in[k] + p in[k-1], with out.size() == in.size() + 1.
void bernoulli_step(std::span<const double> in, std::span<double> out, double p);

// Explicit-backend entry points for equivalence testing. Calling a vector
// backend the CPU lacks is undefined; check backend_available first.
namespace ref {
double sum_squares(std::span<const double> x);
double abs_sum(std::span<const double> x);
double abs_diff_sum(std::span<const double> a, std::span<const double> b);
void scale_symmetric(std::span<double> matrix, std::span<const double> d);
void bernoulli_step(std::span<const double> in, std::span<double> out, double p);
}  // namespace ref

}  // namespace dpplab::simd
