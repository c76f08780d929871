#pragma once

#include <stdexcept>
#include <string>

namespace dpplab {

// Argument outside the domain an operation is defined on (kernel domain,
// bulk window, empty grid, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical post-condition did not hold: eigenvalues outside the clamp
// band, non-finite kernel values, a failed refinement check.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural mismatch between operands, e.g. composing operators that live
// on different quadrature grids.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dpplab
