#include "dpplab/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dpplab/error.hpp"
#include "dpplab/series.hpp"

namespace dpplab::kernels {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTaylorSwitch = 1e-6;

void require_positive_n(int n) {
  if (n < 1) throw DomainError("kernel parameter N must be >= 1, got " + std::to_string(n));
}

// sin(t)/t with the removable point filled.
double sinc(double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }

// t/tan(t), 1 at t = 0.
double tcot(double t) { return t == 0.0 ? 1.0 : t / std::tan(t); }

void check_raw_domain(const KernelSpec& spec, double x, double y) {
  const double hi = spec.ensemble == Ensemble::U ? kTwoPi : kPi;
  auto ok = [hi](double v) { return v >= 0.0 && v < hi; };
  if (!ok(x) || !ok(y)) {
    throw DomainError("raw kernel for " + std::string(to_string(spec.ensemble)) +
                      " evaluated outside [0, " + (spec.ensemble == Ensemble::U ? "2pi" : "pi") +
                      ")");
  }
}

void check_bulk_domain(int n, double x, double y) {
  const double half = 0.5 * n;
  if (!(std::abs(x) < half) || !(std::abs(y) < half)) {
    throw DomainError("bulk kernel requires |x|, |y| < N/2 = " + std::to_string(half));
  }
}

// Parameters of a paired row: S_m(x-y) + sign S_m(x+y).
struct PairedRow {
  int m;
  double sign;
};

PairedRow paired_row(Ensemble e, int n) {
  switch (e) {
    case Ensemble::SO_even: return {2 * n - 1, +1.0};
    case Ensemble::SO_odd: return {2 * n, -1.0};
    case Ensemble::SOminus_odd: return {2 * n, +1.0};
    case Ensemble::SOminus_even:
    case Ensemble::SP: return {2 * n + 1, -1.0};
    default: break;
  }
  throw DomainError("not a paired ensemble");
}

}  // namespace

double dirichlet_ratio(int n, double x) {
  require_positive_n(n);
  const double half_sin = std::sin(0.5 * x);
  if (std::abs(half_sin) >= kTaylorSwitch) return std::sin(0.5 * n * x) / half_sin;

  // x = 2 pi m + eps: the ratio is (-1)^{m(N-1)} sin(N eps/2)/sin(eps/2).
  const double m = std::nearbyint(x / kTwoPi);
  const double eps = x - kTwoPi * m;
  const double nn = n;
  const double n2 = nn * nn;
  const double e2 = eps * eps;
  const double series =
      nn * (1.0 - (n2 - 1.0) * e2 / 24.0 + (3.0 * n2 * n2 - 10.0 * n2 + 7.0) * e2 * e2 / 5760.0);
  const bool odd_m = std::fmod(std::abs(m), 2.0) == 1.0;
  const bool flip = odd_m && (n % 2 == 0);
  return flip ? -series : series;
}

double ensemble_kernel(const KernelSpec& spec, double x, double y) {
  if (spec.ensemble == Ensemble::SINE) return sine_kernel(x, y);
  require_positive_n(spec.n);
  check_raw_domain(spec, x, y);
  if (spec.ensemble == Ensemble::U) return dirichlet_ratio(spec.n, x - y) / kTwoPi;
  const PairedRow row = paired_row(spec.ensemble, spec.n);
  return (dirichlet_ratio(row.m, x - y) + row.sign * dirichlet_ratio(row.m, x + y)) / kTwoPi;
}

double bulk_kernel(const KernelSpec& spec, double x, double y) {
  if (spec.ensemble == Ensemble::SINE) return sine_kernel(x, y);
  require_positive_n(spec.n);
  check_bulk_domain(spec.n, x, y);
  const double nn = spec.n;
  if (spec.ensemble == Ensemble::U) {
    // (1/N) S_N(2 pi (x-y)/N), with the difference formed before scaling.
    return dirichlet_ratio(spec.n, kTwoPi * (x - y) / nn) / nn;
  }
  const PairedRow row = paired_row(spec.ensemble, spec.n);
  const double diff = dirichlet_ratio(row.m, kPi * (x - y) / nn);
  const double sum = dirichlet_ratio(row.m, kPi * (x + y) / nn + kPi);
  return (diff + row.sign * sum) / (2.0 * nn);
}

double evaluate(const KernelSpec& spec, double x, double y) {
  return spec.scaling == Scaling::raw ? ensemble_kernel(spec, x, y) : bulk_kernel(spec, x, y);
}

double sine_kernel(double x, double y) { return sinc(kPi * (x - y)); }

double cj_kernel(int j, double s, double x, double y) {
  const double t = kPi * x * y / s;
  return std::cos(t) * std::pow(t, j) / std::sqrt(2.0 * s);
}

double sj_kernel(int j, double s, double x, double y) {
  const double t = kPi * x * y / s;
  return std::sin(t) * std::pow(t, j) / std::sqrt(2.0 * s);
}

double a_kernel(int k, double x, double y) {
  const double t = kPi * (x - y);
  return std::pow(t, 2 * k + 1) * std::sin(t);
}

double a_prime_kernel(int k, double x, double y) {
  const double t = kPi * (x + y);
  return std::pow(t, 2 * k + 1) * std::sin(t);
}

SoEvenSplit so_even_bulk_split(int n, double x, double y) {
  require_positive_n(n);
  check_bulk_domain(n, x, y);
  const double two_n = 2.0 * n;
  const double d = kPi * (x - y);
  const double s = kPi * (x + y);
  SoEvenSplit out{};
  // sin(d) cot(d/2N) / 2N = sinc(d) * (d/2N) cot(d/2N)
  out.k1 = sinc(d) * tcot(d / two_n);
  out.k2 = std::cos(d) / two_n;
  out.k3 = std::cos(s) / two_n;
  out.k4 = std::sin(s) * std::tan(s / two_n) / two_n;
  return out;
}

double cue_difference_series(int n, int k_max, double x, double y) {
  require_positive_n(n);
  if (k_max < 0) throw DomainError("cue_difference_series: K_max must be >= 0");
  const double nn = n;
  if (!(std::abs(x - y) < nn)) {
    throw DomainError("cue_difference_series: requires |x - y| < N");
  }
  static const series::CoeffTable table(series::CoeffKind::csc, 64);
  if (static_cast<std::size_t>(k_max) >= table.size()) {
    throw DomainError("cue_difference_series: K_max beyond tabulated range");
  }
  const double t = kPi * (x - y);
  const double sin_t = std::sin(t);
  const double ratio = (t / nn) * (t / nn);
  // c_1 t sin(t) / N^2 + c_3 t^3 sin(t) / N^4 + ...
  double term = t * sin_t / (nn * nn);
  double acc = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    acc += table[static_cast<unsigned>(k)].value * term;
    term *= ratio;
  }
  return acc;
}

}  // namespace dpplab::kernels
