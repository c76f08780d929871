#include "dpplab/ensemble.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "dpplab/error.hpp"

namespace dpplab {

std::string_view to_string(Ensemble e) {
  switch (e) {
    case Ensemble::U: return "U";
    case Ensemble::SO_even: return "SO_even";
    case Ensemble::SO_odd: return "SO_odd";
    case Ensemble::SOminus_odd: return "SOminus_odd";
    case Ensemble::SOminus_even: return "SOminus_even";
    case Ensemble::SP: return "SP";
    case Ensemble::SINE: return "SINE";
  }
  return "?";
}

Ensemble parse_ensemble(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (key == "U" || key == "CUE") return Ensemble::U;
  if (key == "SO_EVEN") return Ensemble::SO_even;
  if (key == "SO_ODD") return Ensemble::SO_odd;
  if (key == "SOMINUS_ODD") return Ensemble::SOminus_odd;
  if (key == "SOMINUS_EVEN") return Ensemble::SOminus_even;
  if (key == "SP") return Ensemble::SP;
  if (key == "SINE") return Ensemble::SINE;
  throw DomainError("unknown ensemble '" + std::string(name) + "'");
}

int matrix_dim(Ensemble e, int n) {
  switch (e) {
    case Ensemble::U: return n;
    case Ensemble::SO_even:
    case Ensemble::SP: return 2 * n;
    case Ensemble::SO_odd:
    case Ensemble::SOminus_odd: return 2 * n + 1;
    case Ensemble::SOminus_even: return 2 * n + 2;
    case Ensemble::SINE: break;
  }
  throw DomainError("the sine process has no matrix realization");
}

int row_parameter(Ensemble e, int dim) {
  switch (e) {
    case Ensemble::U: return dim;
    case Ensemble::SO_even:
    case Ensemble::SP: return dim / 2;
    case Ensemble::SO_odd:
    case Ensemble::SOminus_odd: return (dim - 1) / 2;
    case Ensemble::SOminus_even: return (dim - 2) / 2;
    case Ensemble::SINE: break;
  }
  throw DomainError("the sine process has no matrix realization");
}

}  // namespace dpplab
