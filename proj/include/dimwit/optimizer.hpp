#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dimwit/rng.hpp"
#include "dimwit/witness.hpp"

namespace dimwit {

struct OptimizerConfig {
  double epsilon = 0.1;      // initial step length, in (0, 1)
  int max_iterations = 5000;
  double tolerance = 1e-10;  // relative improvement threshold for stagnation
  int window = 10;           // stagnation window, in iterations
  int restarts = 32;
  std::uint64_t seed = 0;
  bool real_only = false;
  int threads = 0;           // worker cap for multi_restart; 0 = auto
};

void validate(const OptimizerConfig& config);

struct OptimizationResult {
  double value = 0.0;
  std::vector<Ket> states;               // M pure states
  std::vector<Povm> povms;               // K POVMs
  std::vector<Ket> measurement_vectors;  // rank-1 runs only
  int iterations_used = 0;
  int restart_index = 0;
  std::vector<double> trace;             // accepted value after each iteration
};

// Invoked after every accepted iterate; useful for validity monitoring.
using IterateObserver =
    std::function<void(int iteration, double value, const std::vector<Ket>& states,
                       const std::vector<Povm>& povms)>;

struct SeesawInit {
  std::vector<Ket> states;
  std::vector<Povm> povms;
};

struct Rank1Init {
  std::vector<Ket> states;
  std::vector<Ket> measurement_vectors;
};

// Alternating steepest-ascent over pure states and full POVMs. Steps that
// decrease the value are reverted with the step length halved; the length is
// restored after 50 accepted steps. Stops when the best value improves by less
// than tolerance * max(1, |best|) over the trailing window.
OptimizationResult seesaw_general(const WitnessCoefficients& w,
                                  const OptimizerConfig& config,
                                  const std::optional<SeesawInit>& init = std::nullopt,
                                  const IterateObserver& observer = nullptr,
                                  int restart_index = 0);

// Specialization for witnesses supported on outcome 1 only: each measurement
// is tracked as a single unit vector and reported as the rank-1 POVM
// {pi pi^dagger, I - pi pi^dagger, 0}.
OptimizationResult seesaw_rank1(const WitnessCoefficients& w,
                                const OptimizerConfig& config,
                                const std::optional<Rank1Init>& init = std::nullopt,
                                const IterateObserver& observer = nullptr,
                                int restart_index = 0);

enum class Algorithm { general, rank1 };

// Best result over config.restarts independent runs; the RNG stream of
// restart r derives from (seed, r) and ties resolve to the lowest index, so
// the outcome does not depend on worker scheduling.
OptimizationResult multi_restart(Algorithm algorithm, const WitnessCoefficients& w,
                                 const OptimizerConfig& config);

}  // namespace dimwit
