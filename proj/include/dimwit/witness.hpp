#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dimwit/correlations.hpp"

namespace dimwit {

// Margin a value must clear above a bound before a verdict fires; sits well
// above numerical noise and well below the physical gaps of interest.
inline constexpr double verdict_tolerance = 1e-9;

// Linear witness W(p) = sum_{i,k,j} c[i][k][j] p[i][k][j] with its bounds.
// classical_bound is the maximum over d-dimensional classical realizations;
// quantum_dim_bound (when known) is the maximum over any dimension above d.
struct WitnessCoefficients {
  Scenario scenario;
  RealVector coefficients;  // flattened over (i, k, j), same layout as CorrelationTensor
  double classical_bound = 0.0;
  std::optional<double> quantum_dim_bound;
  bool canonical = false;  // all no-click (last outcome) coefficients are zero

  double& at(int i, int k, int j) { return coefficients(cell_index(scenario, i, k, j)); }
  double at(int i, int k, int j) const { return coefficients(cell_index(scenario, i, k, j)); }
};

void validate(const WitnessCoefficients& w);

// alpha(i, k) is added to every outcome of cell (i, k); M x K.
using ShiftVector = RealMatrix;

enum class Verdict { inconclusive, exceeds_classical_bound, exceeds_dimension_bound };

std::string to_string(Verdict v);

// The I_{d+1} family: M = d+1 preparations, K = d measurements, N = 3 outcomes,
// coefficients -1 on outcome 1 where i + k <= M, +1 where i + k = M + 1 (1-based).
WitnessCoefficients build_I_witness(int d);

double evaluate(const WitnessCoefficients& w, const CorrelationTensor& p);

// Equivalence-preserving reshift: both bounds move by sum(alpha).
WitnessCoefficients shift_normalize(const WitnessCoefficients& w, const ShiftVector& alpha);

// Reshift with alpha(i,k) = -c[i][k][N-1] so no-click coefficients vanish.
// Required before any loss-scaling argument is applied to a witness.
WitnessCoefficients canonicalize(const WitnessCoefficients& w);

Verdict verdict(const WitnessCoefficients& w, double value);

// (d - 2 + sqrt(2), d): certified bracket for the optimal I_{d+1} value.
std::pair<double, double> bound_sandwich(int d);

}  // namespace dimwit
