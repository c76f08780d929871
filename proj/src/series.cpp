#include "dpplab/series.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>

#include <mutex>
#include <string>

#include "dpplab/error.hpp"

namespace dpplab::series {
namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

// Cached B_0..B_m, grown under a lock.
class BernoulliCache {
 public:
  BernoulliCache() {
    values_.emplace_back(1);
    values_.emplace_back(Rational(-1, 2));
    grow(82);
  }

  Rational get(unsigned n) {
    std::lock_guard lock(mutex_);
    grow(n);
    return values_[n];
  }

 private:
  // Sum_{k=0}^{m} binom(m+1, k) B_k = 0, solved for B_m. Odd m >= 3 are zero
  // and contribute nothing to later sums, so only even k are accumulated
  // beyond k = 1.
  void grow(unsigned n) {
    while (values_.size() <= n) {
      const unsigned m = static_cast<unsigned>(values_.size());
      if (m % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      Rational acc = 0;
      Integer binom = 1;  // binom(m+1, k)
      for (unsigned k = 0; k < m; ++k) {
        if (k == 1 || k % 2 == 0) acc += Rational(binom) * values_[k];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      values_.push_back(-acc / Rational(m + 1));
    }
  }

  std::mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliCache& cache() {
  static BernoulliCache c;
  return c;
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer pow_int(long base, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

Float50 to_float50(const Rational& r) {
  return Float50(boost::multiprecision::numerator(r)) /
         Float50(boost::multiprecision::denominator(r));
}

}  // namespace

double to_double(const Rational& r) { return static_cast<double>(to_float50(r)); }

Rational bernoulli(unsigned n) { return cache().get(n); }

double zeta_even(unsigned n) {
  if (n == 0) throw DomainError("zeta_even: n must be >= 1");
  const Rational scaled = bernoulli(2 * n) / Rational(2 * factorial(2 * n));
  const Float50 two_pi = 2 * boost::math::constants::pi<Float50>();
  Float50 value = boost::multiprecision::pow(two_pi, 2 * n) * to_float50(scaled);
  if (n % 2 == 0) value = -value;  // (-1)^{n+1}
  return static_cast<double>(value);
}

Rational csc_coeff(unsigned k) {
  const Integer scale = 2 * (pow_int(2, 2 * k + 1) - 1);
  Rational c = Rational(scale) * bernoulli(2 * k + 2) / Rational(factorial(2 * k + 2));
  return k % 2 == 0 ? c : Rational(-c);
}

Rational cot_coeff(unsigned k) {
  Rational b = bernoulli(2 * k + 2) / Rational(factorial(2 * k + 2));
  return k % 2 == 1 ? b : Rational(-b);
}

Rational tan_coeff(unsigned k) {
  const Integer scale = pow_int(-4, k + 1) * (1 - pow_int(4, k + 1));
  return Rational(scale) * bernoulli(2 * k + 2) / Rational(factorial(2 * k + 2));
}

double bernoulli_growth_ratio(unsigned n) {
  if (n == 0) throw DomainError("bernoulli_growth_ratio: n must be >= 1");
  using boost::multiprecision::log;
  const Float50 b = boost::multiprecision::abs(to_float50(bernoulli(2 * n)));
  const Float50 pi_e = boost::math::constants::pi<Float50>() * boost::math::constants::e<Float50>();
  const Float50 nn = n;
  const Float50 log_ratio = log(b) + 2 * nn * log(pi_e) - (2 * nn + Float50(0.5)) * log(nn);
  return static_cast<double>(boost::multiprecision::exp(log_ratio));
}

std::string_view to_string(CoeffKind kind) {
  switch (kind) {
    case CoeffKind::csc: return "csc";
    case CoeffKind::cot: return "cot";
    case CoeffKind::tan: return "tan";
  }
  return "?";
}

CoeffKind parse_coeff_kind(std::string_view name) {
  if (name == "csc") return CoeffKind::csc;
  if (name == "cot") return CoeffKind::cot;
  if (name == "tan") return CoeffKind::tan;
  throw DomainError("unknown coefficient kind '" + std::string(name) + "'");
}

Rational coefficient(CoeffKind kind, unsigned k) {
  switch (kind) {
    case CoeffKind::csc: return csc_coeff(k);
    case CoeffKind::cot: return cot_coeff(k);
    case CoeffKind::tan: return tan_coeff(k);
  }
  return 0;
}

CoeffTable::CoeffTable(CoeffKind kind, unsigned max_k) : kind_(kind) {
  extend_to(std::max(max_k, kPrecomputed));
}

const CoeffEntry& CoeffTable::at(unsigned k) {
  extend_to(k);
  return entries_[k];
}

void CoeffTable::extend_to(unsigned k) {
  while (entries_.size() <= k) {
    const auto idx = static_cast<unsigned>(entries_.size());
    Rational exact = coefficient(kind_, idx);
    const double value = to_double(exact);
    entries_.push_back({idx, std::move(exact), value});
  }
}

}  // namespace dpplab::series
