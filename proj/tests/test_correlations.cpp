#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dimwit/correlations.hpp"
#include "test_helpers.hpp"

using namespace dimwit;
using namespace dimwit::testing;

TEST_CASE("scenario fields must all be at least one") {
  CHECK_NOTHROW(validate(Scenario{1, 1, 1, 1}));
  CHECK_THROWS_AS(validate(Scenario{0, 1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(validate(Scenario{3, 2, 2, 0}), ValidationError);
}

TEST_CASE("born probabilities reproduce the example distribution") {
  const CorrelationTensor t =
      born_probabilities(example_quantum_states(), example_quantum_povms());
  const CorrelationTensor expected = example_tensor(2);
  CHECK((t.probabilities - expected.probabilities).lpNorm<Eigen::Infinity>() <= 1e-12);
  CHECK_NOTHROW(validate(t));
}

TEST_CASE("single trivial measurement always clicks") {
  Rng rng(21);
  Povm trivial;
  trivial.elements = {Matrix::Identity(3, 3)};
  const CorrelationTensor t =
      born_probabilities(std::vector<Ket>{random_ket(3, rng)}, {trivial});
  CHECK(t.at(0, 0, 0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("the maximally mixed qubit answers any projective question uniformly") {
  Rng rng(22);
  const Ket axis = random_ket(2, rng);
  Povm projective;
  projective.elements = {density(axis), Matrix::Identity(2, 2) - density(axis)};
  const Matrix mixed = 0.5 * Matrix::Identity(2, 2);
  const CorrelationTensor t = born_probabilities(std::vector<Matrix>{mixed}, {projective});
  CHECK(t.at(0, 0, 0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(t.at(0, 0, 1) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("born rejects mismatched dimensions and broken states") {
  Rng rng(23);
  const std::vector<Ket> qutrit{random_ket(3, rng)};
  CHECK_THROWS_AS(born_probabilities(qutrit, example_quantum_povms()), ValidationError);
  Ket unnormalized = Ket::Zero(2);
  unnormalized(0) = 0.5;
  CHECK_THROWS_AS(born_probabilities(std::vector<Ket>{unnormalized}, example_quantum_povms()),
                  ValidationError);
}

TEST_CASE("a single-branch mixture is the branch") {
  Rng rng(24);
  const Scenario s{2, 2, 3, 2};
  Realization branch;
  for (int i = 0; i < s.preparations; ++i) branch.states.push_back(density(random_ket(2, rng)));
  branch.povms = random_povms(s, rng);
  const CorrelationTensor direct = born_probabilities(branch.states, branch.povms);
  const CorrelationTensor mixed = mix_correlations({{1.0}, {branch}});
  CHECK((direct.probabilities - mixed.probabilities).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("the two-branch classical mixture reproduces the example exactly") {
  const CorrelationTensor mixed = mix_correlations(example_classical_combo());
  const CorrelationTensor expected = example_tensor(2);
  CHECK((mixed.probabilities - expected.probabilities).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("mixing two copies of one branch is idempotent") {
  Rng rng(25);
  const Scenario s{2, 1, 2, 2};
  Realization branch;
  for (int i = 0; i < s.preparations; ++i) branch.states.push_back(density(random_ket(2, rng)));
  branch.povms = random_povms(s, rng);
  const CorrelationTensor direct = born_probabilities(branch.states, branch.povms);
  const CorrelationTensor mixed = mix_correlations({{0.3, 0.7}, {branch, branch}});
  CHECK((direct.probabilities - mixed.probabilities).lpNorm<Eigen::Infinity>() <= 1e-15);
}

TEST_CASE("mixtures reject mismatched branches and bad weights") {
  Rng rng(26);
  Realization qubit_branch;
  qubit_branch.states = {density(random_ket(2, rng))};
  qubit_branch.povms = random_povms(Scenario{1, 1, 2, 2}, rng);
  Realization qutrit_branch;
  qutrit_branch.states = {density(random_ket(3, rng))};
  qutrit_branch.povms = random_povms(Scenario{1, 1, 2, 3}, rng);
  CHECK_THROWS_AS(mix_correlations({{0.5, 0.5}, {qubit_branch, qutrit_branch}}),
                  ValidationError);
  CHECK_THROWS_AS(mix_correlations({{0.6, 0.6}, {qubit_branch, qubit_branch}}),
                  ValidationError);
  CHECK_THROWS_AS(mix_correlations({{1.0}, {qubit_branch, qubit_branch}}), ValidationError);
}

TEST_CASE("apply_loss at the boundary efficiencies") {
  const Povm original = example_quantum_povms()[0];

  const Povm lossless = apply_loss(original, 1.0);
  REQUIRE(lossless.outcomes() == 3);
  CHECK((lossless.elements[0] - original.elements[0]).norm() == 0.0);
  CHECK(lossless.elements[2].norm() == 0.0);

  const Povm opaque = apply_loss(original, 0.0);
  CHECK(opaque.elements[0].norm() == 0.0);
  CHECK((opaque.elements[2] - Matrix::Identity(2, 2)).norm() == 0.0);
}

TEST_CASE("apply_loss scales the computational-basis measurement as stated") {
  Povm basis_measurement;
  basis_measurement.elements = {density(basis_ket(2, 0)), density(basis_ket(2, 1))};
  const Povm lossy = apply_loss(basis_measurement, 0.8);
  REQUIRE(lossy.outcomes() == 3);
  CHECK(lossy.elements[0](0, 0).real() == doctest::Approx(0.8));
  CHECK(lossy.elements[1](1, 1).real() == doctest::Approx(0.8));
  CHECK(lossy.elements[2](0, 0).real() == doctest::Approx(0.2));
  CHECK(lossy.elements[2](1, 1).real() == doctest::Approx(0.2));
  CHECK_NOTHROW(validate(lossy));
}

TEST_CASE("apply_loss rejects efficiencies outside the unit interval") {
  CHECK_THROWS_AS(apply_loss(example_quantum_povms()[0], -0.1), RangeError);
  CHECK_THROWS_AS(apply_loss(example_quantum_povms()[0], 1.1), RangeError);
}

TEST_CASE("lossy_mixture boundaries and midpoint") {
  Rng rng(27);
  const Scenario s{2, 2, 3, 2};
  const CorrelationTensor signal = random_tensor(s, rng);
  const CorrelationTensor noclick = random_tensor(s, rng);
  CHECK((lossy_mixture(signal, noclick, 1.0).probabilities - signal.probabilities).norm() ==
        0.0);
  CHECK((lossy_mixture(signal, noclick, 0.0).probabilities - noclick.probabilities).norm() ==
        0.0);
  const CorrelationTensor midpoint = lossy_mixture(signal, noclick, 0.5);
  CHECK((midpoint.probabilities - 0.5 * (signal.probabilities + noclick.probabilities))
            .lpNorm<Eigen::Infinity>() <= 1e-16);
}

TEST_CASE("lossy_mixture requires a shared scenario") {
  Rng rng(28);
  const CorrelationTensor a = random_tensor(Scenario{2, 2, 3, 2}, rng);
  const CorrelationTensor b = random_tensor(Scenario{2, 2, 2, 2}, rng);
  CHECK_THROWS_AS(lossy_mixture(a, b, 0.5), ValidationError);
}

TEST_CASE("loss commutes with the Born rule across the efficiency grid") {
  Rng rng(29);
  for (const Scenario s : {Scenario{2, 2, 2, 2}, Scenario{3, 2, 3, 3}}) {
    const std::vector<Ket> states = random_states(s, rng);
    const std::vector<Povm> povms = random_povms(s, rng);

    auto lossy_all = [&](double eta) {
      std::vector<Povm> out;
      for (const Povm& povm : povms) out.push_back(apply_loss(povm, eta));
      return out;
    };
    const CorrelationTensor signal = born_probabilities(states, lossy_all(1.0));
    const CorrelationTensor noclick = born_probabilities(states, lossy_all(0.0));

    for (int step = 0; step <= 10; ++step) {
      const double eta = 0.1 * step;
      const CorrelationTensor direct = born_probabilities(states, lossy_all(eta));
      const CorrelationTensor mixed = lossy_mixture(signal, noclick, eta);
      CHECK((direct.probabilities - mixed.probabilities).lpNorm<Eigen::Infinity>() <= 1e-12);
    }
  }
}

TEST_CASE("born rows normalize and lossy POVMs stay complete") {
  Rng rng(30);
  const Scenario s{3, 3, 4, 3};
  const std::vector<Ket> states = random_states(s, rng);
  const std::vector<Povm> povms = random_povms(s, rng);
  CHECK_NOTHROW(validate(born_probabilities(states, povms)));
  for (const Povm& povm : povms) {
    CHECK(povm_completeness_defect(apply_loss(povm, 0.37)) <= completeness_tolerance);
  }
}
