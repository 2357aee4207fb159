#include "dimwit/witness.hpp"

#include <cmath>

namespace dimwit {

namespace {

bool last_outcome_coefficients_vanish(const WitnessCoefficients& w) {
  const Scenario& s = w.scenario;
  for (int i = 0; i < s.preparations; ++i) {
    for (int k = 0; k < s.measurements; ++k) {
      if (w.at(i, k, s.outcomes - 1) != 0.0) return false;
    }
  }
  return true;
}

}  // namespace

void validate(const WitnessCoefficients& w) {
  validate(w.scenario);
  const Scenario& s = w.scenario;
  const Eigen::Index expected =
      static_cast<Eigen::Index>(s.preparations) * s.measurements * s.outcomes;
  if (w.coefficients.size() != expected) {
    throw ValidationError("WitnessCoefficients: coefficient count does not match scenario");
  }
  if (w.canonical && !last_outcome_coefficients_vanish(w)) {
    throw ValidationError(
        "WitnessCoefficients: canonical flag set but no-click coefficients are nonzero");
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::exceeds_classical_bound:
      return "exceeds classical bound";
    case Verdict::exceeds_dimension_bound:
      return "exceeds dimension bound";
    case Verdict::inconclusive:
      break;
  }
  return "inconclusive";
}

WitnessCoefficients build_I_witness(int d) {
  if (d < 2) throw RangeError("build_I_witness: dimension must be at least 2");
  WitnessCoefficients w;
  w.scenario = Scenario{d + 1, d, 3, d};
  w.coefficients =
      RealVector::Zero(static_cast<Eigen::Index>(d + 1) * d * 3);
  for (int i = 0; i < d + 1; ++i) {
    for (int k = 0; k < d; ++k) {
      const int one_based = (i + 1) + (k + 1);
      if (one_based <= d + 1) {
        w.at(i, k, 0) = -1.0;
      } else if (one_based == d + 2) {
        w.at(i, k, 0) = 1.0;
      }
    }
  }
  w.classical_bound = static_cast<double>(d - 1);
  w.quantum_dim_bound = static_cast<double>(d);
  w.canonical = true;
  return w;
}

double evaluate(const WitnessCoefficients& w, const CorrelationTensor& p) {
  if (!same_shape(w.scenario, p.scenario)) {
    throw ValidationError("evaluate: witness and tensor scenarios do not match");
  }
  return w.coefficients.dot(p.probabilities);
}

WitnessCoefficients shift_normalize(const WitnessCoefficients& w, const ShiftVector& alpha) {
  const Scenario& s = w.scenario;
  if (alpha.rows() != s.preparations || alpha.cols() != s.measurements) {
    throw ValidationError("shift_normalize: alpha must be M x K");
  }
  WitnessCoefficients shifted = w;
  double total = 0.0;
  for (int i = 0; i < s.preparations; ++i) {
    for (int k = 0; k < s.measurements; ++k) {
      total += alpha(i, k);
      for (int j = 0; j < s.outcomes; ++j) {
        shifted.at(i, k, j) = w.at(i, k, j) + alpha(i, k);
      }
    }
  }
  shifted.classical_bound = w.classical_bound + total;
  if (w.quantum_dim_bound) {
    shifted.quantum_dim_bound = *w.quantum_dim_bound + total;
  }
  shifted.canonical = last_outcome_coefficients_vanish(shifted);
  return shifted;
}

WitnessCoefficients canonicalize(const WitnessCoefficients& w) {
  const Scenario& s = w.scenario;
  ShiftVector alpha(s.preparations, s.measurements);
  for (int i = 0; i < s.preparations; ++i) {
    for (int k = 0; k < s.measurements; ++k) {
      alpha(i, k) = -w.at(i, k, s.outcomes - 1);
    }
  }
  return shift_normalize(w, alpha);
}

Verdict verdict(const WitnessCoefficients& w, double value) {
  if (w.quantum_dim_bound && value > *w.quantum_dim_bound + verdict_tolerance) {
    return Verdict::exceeds_dimension_bound;
  }
  if (value > w.classical_bound + verdict_tolerance) {
    return Verdict::exceeds_classical_bound;
  }
  return Verdict::inconclusive;
}

std::pair<double, double> bound_sandwich(int d) {
  if (d < 2) throw RangeError("bound_sandwich: dimension must be at least 2");
  return {static_cast<double>(d) - 2.0 + std::sqrt(2.0), static_cast<double>(d)};
}

}  // namespace dimwit
