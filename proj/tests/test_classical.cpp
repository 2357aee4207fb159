#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "dimwit/classical.hpp"
#include "test_helpers.hpp"

using namespace dimwit;
using namespace dimwit::testing;

namespace {

std::string strategy_key(const DeterministicStrategy& s) {
  std::string key;
  for (int v : s.state_assignment) key += std::to_string(v) + ",";
  key += "|";
  for (int r : s.response) key += std::to_string(r) + ",";
  return key;
}

}  // namespace

TEST_CASE("strategy counts for the documented scenarios") {
  CHECK(checked_strategy_count(Scenario{3, 2, 2, 2}) == 128);
  CHECK(checked_strategy_count(Scenario{1, 1, 1, 1}) == 1);
  CHECK(checked_strategy_count(Scenario{4, 3, 3, 3}) == 1594323);
}

TEST_CASE("the count formula matches hand enumeration at (M=2,K=1,N=2,d=2)") {
  // 2 symbols per preparation (4 assignments) x 2 outcomes per (k, symbol)
  // cell (4 response tables) = 16 distinct maps.
  const Scenario s{2, 1, 2, 2};
  CHECK(checked_strategy_count(s) == 16);
  std::set<std::string> seen;
  for_each_strategy(s, [&](std::uint64_t, const DeterministicStrategy& strategy) {
    seen.insert(strategy_key(strategy));
  });
  CHECK(seen.size() == 16);
}

TEST_CASE("counts beyond the cap raise a capacity error naming the count") {
  const Scenario s{4, 3, 3, 3};
  try {
    checked_strategy_count(s, 100000);
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("1594323") != std::string::npos);
  }
  // overflow-sized scenarios also land in CapacityError
  CHECK_THROWS_AS(checked_strategy_count(Scenario{16, 8, 8, 16}), CapacityError);
}

TEST_CASE("enumeration is lexicographic, duplicate-free, and decode-consistent") {
  const Scenario s{2, 2, 2, 2};
  const std::vector<DeterministicStrategy> all = enumerate_strategies(s);
  REQUIRE(all.size() == checked_strategy_count(s));
  std::set<std::string> seen;
  for (std::size_t index = 0; index < all.size(); ++index) {
    seen.insert(strategy_key(all[index]));
    const DeterministicStrategy decoded = decode_strategy(s, index);
    CHECK(decoded.state_assignment == all[index].state_assignment);
    CHECK(decoded.response == all[index].response);
    if (index > 0) CHECK(strategy_key(all[index - 1]) < strategy_key(all[index]));
  }
  CHECK(seen.size() == all.size());
  CHECK(all.front().state_assignment == std::vector<int>{0, 0});
  CHECK(all.back().state_assignment == std::vector<int>{1, 1});
}

TEST_CASE("strategy tensors are deterministic one-hot rows") {
  const Scenario s{3, 2, 3, 2};
  DeterministicStrategy strategy;
  strategy.state_assignment = {0, 0, 1};
  strategy.response = {0, 1, 0, 1};  // both measurements answer the symbol itself
  const CorrelationTensor t = strategy_to_correlations(strategy, s);
  CHECK_NOTHROW(validate(t));
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 2; ++k) {
      int ones = 0;
      for (int j = 0; j < 3; ++j) {
        CHECK((t.at(i, k, j) == 0.0 || t.at(i, k, j) == 1.0));
        if (t.at(i, k, j) == 1.0) ++ones;
      }
      CHECK(ones == 1);
    }
  }
  // the first branch of the example distribution: symbols (0,0,1), readout
  // answers outcome 1 on symbol 0
  CHECK(t.at(0, 0, 0) == 1.0);
  CHECK(t.at(1, 0, 0) == 1.0);
  CHECK(t.at(2, 0, 1) == 1.0);
}

TEST_CASE("constant responses produce a constant column") {
  const Scenario s{2, 2, 3, 2};
  DeterministicStrategy strategy;
  strategy.state_assignment = {0, 1};
  strategy.response = {2, 2, 2, 2};
  const CorrelationTensor t = strategy_to_correlations(strategy, s);
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) CHECK(t.at(i, k, 2) == 1.0);
  }
}

TEST_CASE("classical maxima of the witness family are exactly d-1") {
  const ClassicalMax best2 = classical_max(build_I_witness(2));
  CHECK(best2.value == 1.0);
  const ClassicalMax best3 = classical_max(build_I_witness(3));
  CHECK(best3.value == 2.0);
}

TEST_CASE("the all-zero witness has classical maximum zero at the first strategy") {
  WitnessCoefficients w;
  w.scenario = Scenario{2, 2, 2, 2};
  w.coefficients = RealVector::Zero(8);
  const ClassicalMax best = classical_max(w);
  CHECK(best.value == 0.0);
  CHECK(best.argmax_index == 0);
}

TEST_CASE("shifting a witness shifts its classical maximum but not the argmax") {
  Rng rng(61);
  const Scenario s{3, 2, 3, 2};
  const WitnessCoefficients w = random_witness(s, rng);
  ShiftVector alpha(3, 2);
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 2; ++k) {
      alpha(i, k) = 2.0 * rng.uniform() - 1.0;
      total += alpha(i, k);
    }
  }
  const ClassicalMax plain = classical_max(w);
  const ClassicalMax shifted = classical_max(shift_normalize(w, alpha));
  CHECK(shifted.argmax_index == plain.argmax_index);
  CHECK(shifted.value == doctest::Approx(plain.value + total).epsilon(1e-12));
}

TEST_CASE("the example distribution lies inside the classical polytope") {
  const MembershipResult r = conv_c_membership(example_tensor(2), 2);
  CHECK(r.feasible);
  CHECK_FALSE(r.weights.empty());
  // soundness: recombine the returned weights and compare
  const CorrelationTensor target = example_tensor(2);
  RealVector rebuilt = RealVector::Zero(target.probabilities.size());
  double weight_sum = 0.0;
  const Scenario s{3, 2, 2, 2};
  for (const auto& [index, weight] : r.weights) {
    rebuilt += weight * strategy_to_correlations(decode_strategy(s, index), s).probabilities;
    weight_sum += weight;
  }
  CHECK(std::abs(weight_sum - 1.0) <= 1e-8);
  CHECK((rebuilt - target.probabilities).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("the optimal quantum tensor is outside the classical polytope") {
  const OptimalQubitRealization optimal = optimal_qubit_realization();
  const CorrelationTensor t = born_probabilities(optimal.states, optimal.padded_povms);
  const MembershipResult r = conv_c_membership(t, 2);
  CHECK_FALSE(r.feasible);
  CHECK(r.residual > 1e-3);
}

TEST_CASE("the uniform tensor is a mixture of constant responses") {
  CorrelationTensor uniform = CorrelationTensor::zeros(Scenario{3, 2, 3, 2});
  uniform.probabilities.setConstant(1.0 / 3.0);
  const MembershipResult r = conv_c_membership(uniform, 2);
  CHECK(r.feasible);
}

TEST_CASE("membership enforces the tighter vertex cap") {
  // at d=3 this scenario has 3^4 * 3^9 vertices, beyond the LP cap
  CorrelationTensor big = CorrelationTensor::zeros(Scenario{4, 3, 3, 3});
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 3; ++k) big.at(i, k, 0) = 1.0;
  }
  CHECK_THROWS_AS(conv_c_membership(big, 3), CapacityError);
}

TEST_CASE("feasible tensors never beat the classical maximum of any witness") {
  Rng rng(62);
  const Scenario s{3, 2, 2, 2};
  for (int trial = 0; trial < 10; ++trial) {
    // random mixture of a few strategies, so membership must hold
    const std::uint64_t count = checked_strategy_count(s);
    CorrelationTensor mix = CorrelationTensor::zeros(s);
    double total = 0.0;
    for (int pick = 0; pick < 4; ++pick) {
      const double weight = rng.uniform_positive();
      const DeterministicStrategy strategy = decode_strategy(s, rng.bits() % count);
      mix.probabilities += weight * strategy_to_correlations(strategy, s).probabilities;
      total += weight;
    }
    mix.probabilities /= total;
    const MembershipResult r = conv_c_membership(mix, 2);
    CHECK(r.feasible);
    const WitnessCoefficients w = random_witness(s, rng);
    CHECK(evaluate(w, mix) <= classical_max(w).value + 1e-8);
  }
}
