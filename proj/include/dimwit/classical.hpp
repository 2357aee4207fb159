#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dimwit/correlations.hpp"
#include "dimwit/simplex.hpp"
#include "dimwit/witness.hpp"

namespace dimwit {

// Streaming enumeration cap (classical_max) and the tighter cap for the
// materialized vertex matrix of the membership LP.
inline constexpr std::uint64_t enumeration_cap = 10'000'000;
inline constexpr std::uint64_t membership_cap = 100'000;

// Extreme point of the shared-randomness classical polytope: each preparation
// carries one of d symbols, each (measurement, symbol) pair answers with a
// fixed outcome.
struct DeterministicStrategy {
  std::vector<int> state_assignment;  // size M, values in [0, d)
  std::vector<int> response;          // size K*d, response[k*d + v] in [0, N)
};

struct MembershipResult {
  bool feasible = false;
  // (strategy index, weight) for the nonzero weights of a witnessing mixture.
  std::vector<std::pair<std::uint64_t, double>> weights;
  double residual = 0.0;  // max entrywise violation of the returned mixture
};

// d^M * N^(K*d); throws CapacityError (naming the count) when above cap.
std::uint64_t checked_strategy_count(const Scenario& s,
                                     std::uint64_t cap = enumeration_cap);

DeterministicStrategy decode_strategy(const Scenario& s, std::uint64_t index);

// Visits all strategies in lexicographic order of the digit string
// (state_assignment first, then response, last digit fastest).
template <typename Visitor>
void for_each_strategy(const Scenario& s, Visitor&& visit,
                       std::uint64_t cap = enumeration_cap) {
  const std::uint64_t count = checked_strategy_count(s, cap);
  DeterministicStrategy strategy;
  strategy.state_assignment.assign(s.preparations, 0);
  strategy.response.assign(static_cast<std::size_t>(s.measurements) * s.dimension, 0);
  const DeterministicStrategy& view = strategy;
  for (std::uint64_t index = 0; index < count; ++index) {
    visit(index, view);
    // odometer increment, response digits fastest
    bool wrapped = true;
    for (int pos = static_cast<int>(strategy.response.size()) - 1; pos >= 0; --pos) {
      if (++strategy.response[pos] < s.outcomes) {
        wrapped = false;
        break;
      }
      strategy.response[pos] = 0;
    }
    if (!wrapped) continue;
    for (int pos = s.preparations - 1; pos >= 0; --pos) {
      if (++strategy.state_assignment[pos] < s.dimension) break;
      strategy.state_assignment[pos] = 0;
    }
  }
}

std::vector<DeterministicStrategy> enumerate_strategies(
    const Scenario& s, std::uint64_t cap = enumeration_cap);

CorrelationTensor strategy_to_correlations(const DeterministicStrategy& strategy,
                                           const Scenario& s);

struct ClassicalMax {
  double value = 0.0;
  DeterministicStrategy argmax;
  std::uint64_t argmax_index = 0;
};

// Exact maximum of the witness over deterministic strategies; by linearity no
// shared-randomness mixture can do better. Ties resolve to the lowest index.
ClassicalMax classical_max(const WitnessCoefficients& w,
                           std::uint64_t cap = enumeration_cap);

// Phase-1 LP deciding whether p is a convex mixture of strategy tensors at
// dimension d.
MembershipResult conv_c_membership(const CorrelationTensor& p, int d,
                                   std::uint64_t cap = membership_cap,
                                   double tol = 1e-9);

}  // namespace dimwit
