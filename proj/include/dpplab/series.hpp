#pragma once

// Bernoulli numbers and the odd-index series coefficients of csc, cot and
// tan that drive the kernel-difference expansions.
//
//   csc(x) - 1/x              = sum_k c_{2k+1} x^{2k+1},          0 < |x| < pi
//   cot(u/2N)/(2N) - 1/u      = sum_k b_{2k+1} u^{2k+1} / N^{2k+2}
//   tan(z)                    = sum_k a_{2k+1} z^{2k+1},           |z| < pi/2
//
// All coefficients are exact rationals derived from B_{2k+2}; the double
// views are rounded from the rationals, never computed independently.

#include <boost/multiprecision/cpp_int.hpp>

#include <string_view>
#include <vector>

namespace dpplab::series {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Nearest double to r.
double to_double(const Rational& r);

// B_n with the B_1 = -1/2 convention. Computed once by the exact recurrence
// and cached; safe to call concurrently.
Rational bernoulli(unsigned n);

// zeta(2n) through the Bernoulli closed form, evaluated in 50-digit
// arithmetic so large n neither overflows nor loses the last bits. n >= 1.
double zeta_even(unsigned n);

Rational csc_coeff(unsigned k);
Rational cot_coeff(unsigned k);
Rational tan_coeff(unsigned k);

// |B_{2n}| (pi e)^{2n} / n^{2n+1/2}, computed in log space. Tends to
// 4 sqrt(pi) from above. n >= 1.
double bernoulli_growth_ratio(unsigned n);

enum class CoeffKind { csc, cot, tan };

std::string_view to_string(CoeffKind kind);
CoeffKind parse_coeff_kind(std::string_view name);

struct CoeffEntry {
  unsigned k;
  Rational exact;
  double value;
};

// Consecutive coefficients k = 0, 1, ... of one kind. The first 41 entries
// are filled at construction; at() extends the table on demand.
class CoeffTable {
 public:
  static constexpr unsigned kPrecomputed = 40;

  explicit CoeffTable(CoeffKind kind, unsigned max_k = kPrecomputed);

  CoeffKind kind() const { return kind_; }
  const std::vector<CoeffEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Entry k, extending the table if needed. Not safe concurrently with
  // other calls that extend; share a table across threads only after it
  // covers every index they read.
  const CoeffEntry& at(unsigned k);

  // Read-only lookup; k must already be present.
  const CoeffEntry& operator[](unsigned k) const { return entries_[k]; }

 private:
  void extend_to(unsigned k);

  CoeffKind kind_;
  std::vector<CoeffEntry> entries_;
};

Rational coefficient(CoeffKind kind, unsigned k);

}  // namespace dpplab::series
