#include "dimwit/classical.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace dimwit {

namespace {

// d^M * N^(K*d) with overflow saturation.
std::uint64_t saturating_strategy_count(const Scenario& s, bool* overflow) {
  *overflow = false;
  auto mul_pow = [&](std::uint64_t acc, std::uint64_t base, int exponent) {
    for (int e = 0; e < exponent; ++e) {
      if (base != 0 && acc > std::numeric_limits<std::uint64_t>::max() / base) {
        *overflow = true;
        return std::numeric_limits<std::uint64_t>::max();
      }
      acc *= base;
    }
    return acc;
  };
  std::uint64_t count = mul_pow(1u, static_cast<std::uint64_t>(s.dimension), s.preparations);
  if (*overflow) return count;
  return mul_pow(count, static_cast<std::uint64_t>(s.outcomes),
                 s.measurements * s.dimension);
}

}  // namespace

std::uint64_t checked_strategy_count(const Scenario& s, std::uint64_t cap) {
  validate(s);
  bool overflow = false;
  const std::uint64_t count = saturating_strategy_count(s, &overflow);
  if (overflow || count > cap) {
    const std::string shown =
        overflow ? "more than " + std::to_string(std::numeric_limits<std::uint64_t>::max())
                 : std::to_string(count);
    throw CapacityError("strategy count " + shown + " exceeds cap " + std::to_string(cap));
  }
  return count;
}

DeterministicStrategy decode_strategy(const Scenario& s, std::uint64_t index) {
  validate(s);
  DeterministicStrategy strategy;
  strategy.state_assignment.assign(s.preparations, 0);
  strategy.response.assign(static_cast<std::size_t>(s.measurements) * s.dimension, 0);
  for (int pos = static_cast<int>(strategy.response.size()) - 1; pos >= 0; --pos) {
    strategy.response[pos] = static_cast<int>(index % s.outcomes);
    index /= s.outcomes;
  }
  for (int pos = s.preparations - 1; pos >= 0; --pos) {
    strategy.state_assignment[pos] = static_cast<int>(index % s.dimension);
    index /= s.dimension;
  }
  return strategy;
}

std::vector<DeterministicStrategy> enumerate_strategies(const Scenario& s,
                                                        std::uint64_t cap) {
  std::vector<DeterministicStrategy> all;
  all.reserve(checked_strategy_count(s, cap));
  for_each_strategy(
      s, [&](std::uint64_t, const DeterministicStrategy& strategy) { all.push_back(strategy); },
      cap);
  return all;
}

CorrelationTensor strategy_to_correlations(const DeterministicStrategy& strategy,
                                           const Scenario& s) {
  validate(s);
  if (strategy.state_assignment.size() != static_cast<std::size_t>(s.preparations) ||
      strategy.response.size() !=
          static_cast<std::size_t>(s.measurements) * static_cast<std::size_t>(s.dimension)) {
    throw ValidationError("strategy_to_correlations: strategy does not fit scenario");
  }
  CorrelationTensor t = CorrelationTensor::zeros(s);
  for (int i = 0; i < s.preparations; ++i) {
    const int symbol = strategy.state_assignment[i];
    if (symbol < 0 || symbol >= s.dimension) {
      throw ValidationError("strategy_to_correlations: symbol out of range");
    }
    for (int k = 0; k < s.measurements; ++k) {
      const int outcome = strategy.response[static_cast<std::size_t>(k) * s.dimension + symbol];
      if (outcome < 0 || outcome >= s.outcomes) {
        throw ValidationError("strategy_to_correlations: outcome out of range");
      }
      t.at(i, k, outcome) = 1.0;
    }
  }
  return t;
}

ClassicalMax classical_max(const WitnessCoefficients& w, std::uint64_t cap) {
  validate(w);
  const Scenario& s = w.scenario;
  ClassicalMax best;
  bool first = true;
  for_each_strategy(s, [&](std::uint64_t index, const DeterministicStrategy& strategy) {
    double value = 0.0;
    for (int i = 0; i < s.preparations; ++i) {
      const int symbol = strategy.state_assignment[i];
      for (int k = 0; k < s.measurements; ++k) {
        value += w.at(i, k, strategy.response[static_cast<std::size_t>(k) * s.dimension + symbol]);
      }
    }
    if (first || value > best.value) {
      best.value = value;
      best.argmax = strategy;
      best.argmax_index = index;
      first = false;
    }
  }, cap);
  return best;
}

MembershipResult conv_c_membership(const CorrelationTensor& p, int d,
                                   std::uint64_t cap, double tol) {
  validate(p);
  Scenario s = p.scenario;
  s.dimension = d;
  validate(s);
  const std::uint64_t count = checked_strategy_count(s, cap);

  // One column per strategy tensor, one extra row pinning the weight sum to 1.
  const Eigen::Index cells = p.probabilities.size();
  RealMatrix vertices(cells + 1, static_cast<Eigen::Index>(count));
  for_each_strategy(s, [&](std::uint64_t index, const DeterministicStrategy& strategy) {
    const CorrelationTensor tensor = strategy_to_correlations(strategy, s);
    vertices.col(static_cast<Eigen::Index>(index)).head(cells) = tensor.probabilities;
    vertices(cells, static_cast<Eigen::Index>(index)) = 1.0;
  }, cap);

  RealVector target(cells + 1);
  target.head(cells) = p.probabilities;
  target(cells) = 1.0;

  const FeasibilityResult lp = phase1_feasible(vertices, target, tol);

  MembershipResult result;
  result.feasible = lp.feasible;
  result.residual = lp.max_violation;
  if (lp.feasible) {
    for (Eigen::Index v = 0; v < lp.solution.size(); ++v) {
      if (lp.solution(v) > 1e-12) {
        result.weights.emplace_back(static_cast<std::uint64_t>(v), lp.solution(v));
      }
    }
  }
  return result;
}

}  // namespace dimwit
