#pragma once

#include <memory>
#include <vector>

namespace dpplab {

// Gauss-Legendre nodes and weights on [lo, hi]. Nodes strictly increasing,
// weights positive and summing to hi - lo.
struct QuadratureGrid {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  double half_width() const { return 0.5 * (hi - lo); }
  double length() const { return hi - lo; }

  bool same_as(const QuadratureGrid& other) const {
    return lo == other.lo && hi == other.hi && nodes == other.nodes && weights == other.weights;
  }
};

using GridPtr = std::shared_ptr<const QuadratureGrid>;

// n-point rule on [lo, hi]; exact for polynomials of degree <= 2n - 1.
GridPtr gauss_legendre(int n, double lo, double hi);

// n-point rule on [-s, s].
inline GridPtr gauss_legendre(int n, double s) { return gauss_legendre(n, -s, s); }

}  // namespace dpplab
