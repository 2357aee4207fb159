#include "dimwit/correlations.hpp"

#include <cmath>
#include <string>

namespace dimwit {

namespace {

std::string cell_name(int i, int k) {
  return "(i=" + std::to_string(i + 1) + ",k=" + std::to_string(k + 1) + ")";
}

// Born probabilities are real up to round-off; tiny negative dust is clamped.
double clamp_probability(double p) {
  if (p < 0.0 && p > -1e-12) return 0.0;
  return p;
}

void require_realization_shapes(std::size_t state_count, int state_dim,
                                const std::vector<Povm>& povms) {
  if (state_count == 0 || povms.empty()) {
    throw ValidationError("born_probabilities: need at least one state and one POVM");
  }
  const int n = povms.front().outcomes();
  for (const Povm& povm : povms) {
    if (povm.outcomes() != n) {
      throw ValidationError("born_probabilities: POVMs must share one outcome count");
    }
    for (const Matrix& element : povm.elements) {
      if (element.rows() != state_dim || element.cols() != state_dim) {
        throw ValidationError("born_probabilities: POVM element dimension mismatch");
      }
    }
  }
}

Scenario branch_scenario(const Realization& branch) {
  if (branch.states.empty() || branch.povms.empty()) {
    throw ValidationError("mix_correlations: branch with no states or no POVMs");
  }
  return Scenario{static_cast<int>(branch.states.size()),
                  static_cast<int>(branch.povms.size()),
                  branch.povms.front().outcomes(),
                  static_cast<int>(branch.states.front().rows())};
}

}  // namespace

void validate(const Scenario& s) {
  if (s.preparations < 1 || s.measurements < 1 || s.outcomes < 1 || s.dimension < 1) {
    throw ValidationError("Scenario: all of M, K, N, d must be at least 1");
  }
}

bool same_shape(const Scenario& a, const Scenario& b) {
  return a.preparations == b.preparations && a.measurements == b.measurements &&
         a.outcomes == b.outcomes;
}

double povm_completeness_defect(const Povm& povm) {
  if (povm.elements.empty()) return 1.0;
  const int d = povm.dimension();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& element : povm.elements) sum += element;
  return (sum - Matrix::Identity(d, d)).lpNorm<Eigen::Infinity>();
}

double povm_min_eigenvalue(const Povm& povm) {
  double lowest = 0.0;
  for (const Matrix& element : povm.elements) {
    lowest = std::min(lowest, min_eigenvalue(element));
  }
  return lowest;
}

void validate(const Povm& povm) {
  if (povm.elements.empty()) throw ValidationError("Povm: no elements");
  const int d = povm.dimension();
  for (const Matrix& element : povm.elements) {
    if (element.rows() != d || element.cols() != d) {
      throw ValidationError("Povm: elements must share one square dimension");
    }
    if (hermiticity_defect(element) > hermiticity_tolerance) {
      throw ValidationError("Povm: element is not Hermitian");
    }
  }
  const double lowest = povm_min_eigenvalue(povm);
  if (lowest < -psd_tolerance) {
    throw ValidationError("Povm: element eigenvalue " + std::to_string(lowest) +
                          " below PSD tolerance");
  }
  const double defect = povm_completeness_defect(povm);
  if (defect > completeness_tolerance) {
    throw ValidationError("Povm: elements sum to identity only within " +
                          std::to_string(defect));
  }
}

CorrelationTensor CorrelationTensor::zeros(const Scenario& s) {
  validate(s);
  CorrelationTensor t;
  t.scenario = s;
  t.probabilities = RealVector::Zero(
      static_cast<Eigen::Index>(s.preparations) * s.measurements * s.outcomes);
  return t;
}

void validate(const CorrelationTensor& t) {
  validate(t.scenario);
  const Scenario& s = t.scenario;
  const Eigen::Index expected =
      static_cast<Eigen::Index>(s.preparations) * s.measurements * s.outcomes;
  if (t.probabilities.size() != expected) {
    throw ValidationError("CorrelationTensor: entry count does not match scenario");
  }
  for (int i = 0; i < s.preparations; ++i) {
    for (int k = 0; k < s.measurements; ++k) {
      double row_sum = 0.0;
      for (int j = 0; j < s.outcomes; ++j) {
        const double p = t.at(i, k, j);
        if (p < -completeness_tolerance || p > 1.0 + completeness_tolerance) {
          throw ValidationError("CorrelationTensor: entry outside [0,1] at " +
                                cell_name(i, k) + " j=" + std::to_string(j + 1));
        }
        row_sum += p;
      }
      if (std::abs(row_sum - 1.0) > completeness_tolerance) {
        throw ValidationError("CorrelationTensor: outcomes at " + cell_name(i, k) +
                              " sum to " + std::to_string(row_sum));
      }
    }
  }
}

Matrix density(const Ket& psi) { return psi * psi.adjoint(); }

CorrelationTensor born_probabilities(const std::vector<Matrix>& states,
                                     const std::vector<Povm>& povms) {
  if (states.empty()) throw ValidationError("born_probabilities: no states");
  const int d = static_cast<int>(states.front().rows());
  for (const Matrix& rho : states) {
    if (rho.rows() != d || rho.cols() != d) {
      throw ValidationError("born_probabilities: state dimension mismatch");
    }
    if (hermiticity_defect(rho) > hermiticity_tolerance) {
      throw ValidationError("born_probabilities: state is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > completeness_tolerance) {
      throw ValidationError("born_probabilities: state trace is not 1");
    }
  }
  require_realization_shapes(states.size(), d, povms);

  const Scenario s{static_cast<int>(states.size()), static_cast<int>(povms.size()),
                   povms.front().outcomes(), d};
  CorrelationTensor t = CorrelationTensor::zeros(s);
  for (int i = 0; i < s.preparations; ++i) {
    for (int k = 0; k < s.measurements; ++k) {
      for (int j = 0; j < s.outcomes; ++j) {
        t.at(i, k, j) =
            clamp_probability((states[i] * povms[k].elements[j]).trace().real());
      }
    }
  }
  return t;
}

CorrelationTensor born_probabilities(const std::vector<Ket>& states,
                                     const std::vector<Povm>& povms) {
  if (states.empty()) throw ValidationError("born_probabilities: no states");
  const int d = static_cast<int>(states.front().size());
  for (const Ket& psi : states) {
    if (psi.size() != d) {
      throw ValidationError("born_probabilities: state dimension mismatch");
    }
    if (std::abs(psi.squaredNorm() - 1.0) > state_norm_tolerance) {
      throw ValidationError("born_probabilities: pure state is not normalized");
    }
  }
  require_realization_shapes(states.size(), d, povms);

  const Scenario s{static_cast<int>(states.size()), static_cast<int>(povms.size()),
                   povms.front().outcomes(), d};
  CorrelationTensor t = CorrelationTensor::zeros(s);
  for (int i = 0; i < s.preparations; ++i) {
    for (int k = 0; k < s.measurements; ++k) {
      for (int j = 0; j < s.outcomes; ++j) {
        t.at(i, k, j) =
            clamp_probability(states[i].dot(povms[k].elements[j] * states[i]).real());
      }
    }
  }
  return t;
}

CorrelationTensor mix_correlations(const ConvexCombination& combo) {
  if (combo.weights.size() != combo.branches.size()) {
    throw ValidationError("mix_correlations: weight and branch counts differ");
  }
  if (combo.branches.empty()) {
    throw ValidationError("mix_correlations: empty combination");
  }
  double total = 0.0;
  for (double w : combo.weights) {
    if (w < 0.0) throw ValidationError("mix_correlations: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > completeness_tolerance) {
    throw ValidationError("mix_correlations: weights sum to " + std::to_string(total));
  }

  const Scenario s = branch_scenario(combo.branches.front());
  CorrelationTensor mixed = CorrelationTensor::zeros(s);
  for (std::size_t b = 0; b < combo.branches.size(); ++b) {
    if (branch_scenario(combo.branches[b]) != s) {
      throw ValidationError("mix_correlations: branch " + std::to_string(b) +
                            " has a different scenario");
    }
    const CorrelationTensor branch =
        born_probabilities(combo.branches[b].states, combo.branches[b].povms);
    mixed.probabilities += combo.weights[b] * branch.probabilities;
  }
  return mixed;
}

Povm apply_loss(const Povm& povm, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw RangeError("apply_loss: detection efficiency must lie in [0,1]");
  }
  if (povm.elements.empty()) throw ValidationError("apply_loss: empty POVM");
  const int d = povm.dimension();
  Povm lossy;
  lossy.elements.reserve(povm.elements.size() + 1);
  for (const Matrix& element : povm.elements) {
    lossy.elements.push_back(eta * element);
  }
  lossy.elements.push_back((1.0 - eta) * Matrix::Identity(d, d));
  return lossy;
}

CorrelationTensor lossy_mixture(const CorrelationTensor& signal,
                                const CorrelationTensor& noclick, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw RangeError("lossy_mixture: detection efficiency must lie in [0,1]");
  }
  if (signal.scenario != noclick.scenario) {
    throw ValidationError("lossy_mixture: tensors do not share a scenario");
  }
  CorrelationTensor mixed;
  mixed.scenario = signal.scenario;
  mixed.probabilities =
      eta * signal.probabilities + (1.0 - eta) * noclick.probabilities;
  return mixed;
}

}  // namespace dimwit
