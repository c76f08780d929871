#include "dpplab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dpplab/error.hpp"

namespace dpplab {

GridPtr gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
  if (!(hi > lo)) throw DomainError("gauss_legendre: empty interval");

  auto grid = std::make_shared<QuadratureGrid>();
  grid->lo = lo;
  grid->hi = hi;
  grid->nodes.resize(n);
  grid->weights.resize(n);

  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  const int pairs = (n + 1) / 2;
  for (int i = 0; i < pairs; ++i) {
    // Newton on P_n from the Tricomi-style initial guess; roots in descending order.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    grid->nodes[i] = mid - half * z;
    grid->nodes[n - 1 - i] = mid + half * z;
    grid->weights[i] = half * w;
    grid->weights[n - 1 - i] = half * w;
  }
  if (n % 2 == 1) grid->nodes[n / 2] = mid;
  return grid;
}

}  // namespace dpplab
