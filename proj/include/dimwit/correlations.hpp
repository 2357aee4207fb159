#pragma once

#include <vector>

#include "dimwit/core_math.hpp"
#include "dimwit/types.hpp"

namespace dimwit {

// POVM completeness and tensor row-normalization tolerance.
inline constexpr double completeness_tolerance = 1e-9;
// Squared-norm tolerance for pure states.
inline constexpr double state_norm_tolerance = 1e-12;

// Prepare-and-measure scenario: M preparations, K measurements with N outcomes
// each (the no-click outcome, when present, is the last index), Hilbert
// dimension d.
struct Scenario {
  int preparations = 1;  // M
  int measurements = 1;  // K
  int outcomes = 1;      // N
  int dimension = 1;     // d

  bool operator==(const Scenario&) const = default;
};

void validate(const Scenario& s);

// Same (M, K, N) signature; the dimension is a property of a realization, not
// of observed statistics, so it does not participate in shape checks.
bool same_shape(const Scenario& a, const Scenario& b);

// Flat index of (preparation i, measurement k, outcome j).
inline Eigen::Index cell_index(const Scenario& s, int i, int k, int j) {
  return static_cast<Eigen::Index>(i * s.measurements + k) * s.outcomes + j;
}

// Measurement as an ordered list of PSD elements summing to identity.
struct Povm {
  std::vector<Matrix> elements;

  int outcomes() const { return static_cast<int>(elements.size()); }
  int dimension() const { return elements.empty() ? 0 : static_cast<int>(elements.front().rows()); }
};

double povm_completeness_defect(const Povm& povm);  // max entrywise |sum - I|
double povm_min_eigenvalue(const Povm& povm);       // min over all elements
void validate(const Povm& povm);

// Conditional probabilities p[i][k][j], flattened over (i, k, j).
struct CorrelationTensor {
  Scenario scenario;
  RealVector probabilities;

  static CorrelationTensor zeros(const Scenario& s);

  double& at(int i, int k, int j) { return probabilities(cell_index(scenario, i, k, j)); }
  double at(int i, int k, int j) const { return probabilities(cell_index(scenario, i, k, j)); }
};

void validate(const CorrelationTensor& t);

// One (states, POVMs) pair; states are density matrices.
struct Realization {
  std::vector<Matrix> states;
  std::vector<Povm> povms;
};

// Shared-randomness mixture of realizations.
struct ConvexCombination {
  std::vector<double> weights;
  std::vector<Realization> branches;
};

Matrix density(const Ket& psi);  // |psi><psi|

CorrelationTensor born_probabilities(const std::vector<Matrix>& states,
                                     const std::vector<Povm>& povms);
CorrelationTensor born_probabilities(const std::vector<Ket>& states,
                                     const std::vector<Povm>& povms);

CorrelationTensor mix_correlations(const ConvexCombination& combo);

// {eta * each element, (1 - eta) * I}; appends the no-click outcome last.
Povm apply_loss(const Povm& povm, double eta);

// Entrywise eta * signal + (1 - eta) * noclick.
CorrelationTensor lossy_mixture(const CorrelationTensor& signal,
                                const CorrelationTensor& noclick, double eta);

}  // namespace dimwit
