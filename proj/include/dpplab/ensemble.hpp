#pragma once

#include <array>
#include <string>
#include <string_view>

namespace dpplab {

// Which eigenangle process an object refers to. The integer parameter N that
// accompanies an ensemble is always the row parameter of the kernel table
// (number of nontrivial eigenangles), not the matrix dimension.
enum class Ensemble {
  U,             // U(N)
  SO_even,       // SO(2N)
  SO_odd,        // SO(2N+1)
  SOminus_odd,   // SO^-(2N+1)
  SOminus_even,  // SO^-(2N+2), same kernel as SP
  SP,            // Sp(2N)
  SINE,
};

inline constexpr std::array<Ensemble, 7> kAllEnsembles = {
    Ensemble::U,           Ensemble::SO_even,      Ensemble::SO_odd, Ensemble::SOminus_odd,
    Ensemble::SOminus_even, Ensemble::SP,          Ensemble::SINE};

// Ensembles that come from a matrix group (everything except SINE).
inline constexpr std::array<Ensemble, 6> kGroupEnsembles = {
    Ensemble::U,           Ensemble::SO_even,      Ensemble::SO_odd, Ensemble::SOminus_odd,
    Ensemble::SOminus_even, Ensemble::SP};

std::string_view to_string(Ensemble e);

// Accepts the enumerator names ("SO_even") and a few aliases ("CUE", "SOminus_even").
// Throws DomainError on anything else.
Ensemble parse_ensemble(std::string_view name);

// Dimension of the matrices sampled for row parameter n.
int matrix_dim(Ensemble e, int n);

// Row parameter recovered from the matrix dimension; inverse of matrix_dim.
int row_parameter(Ensemble e, int dim);

// True for the ensembles with real or quaternionic structure, whose
// eigenvalues come in conjugate pairs and whose raw domain is [0, pi).
inline bool is_paired(Ensemble e) { return e != Ensemble::U && e != Ensemble::SINE; }

}  // namespace dpplab
