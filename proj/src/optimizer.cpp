#include "dimwit/optimizer.hpp"

#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <utility>

namespace dimwit {

namespace {

// Step-length control: an overshoot reverts the step and halves epsilon; the
// initial length is restored after 50 accepted steps.
struct AscentControl {
  double epsilon;
  double initial_epsilon;
  int accepted_since_halve = 0;
  bool halved = false;

  void on_accept() {
    if (halved && ++accepted_since_halve >= 50) {
      epsilon = initial_epsilon;
      halved = false;
      accepted_since_halve = 0;
    }
  }
  void on_reject() {
    epsilon *= 0.5;
    halved = true;
    accepted_since_halve = 0;
  }
};

// Stops when the best value gains less than tolerance * max(1, |best|) over
// the trailing window.
struct StagnationTracker {
  int window;
  double tolerance;
  std::vector<double> best_history;

  void start(double value) { best_history.assign(1, value); }

  bool stagnated(double value) {
    const double best = std::max(best_history.back(), value);
    best_history.push_back(best);
    const int elapsed = static_cast<int>(best_history.size()) - 1;
    if (elapsed < window) return false;
    const double gain = best - best_history[elapsed - window];
    return gain < tolerance * std::max(1.0, std::abs(best));
  }
};

void require_valid_iterate(const std::vector<Ket>& states,
                           const std::vector<Povm>& povms, int iteration) {
  for (const Ket& psi : states) {
    if (std::abs(psi.squaredNorm() - 1.0) > state_norm_tolerance) {
      throw NumericError("seesaw iteration " + std::to_string(iteration) +
                         ": state left the unit sphere");
    }
  }
  for (const Povm& povm : povms) {
    const double lowest = povm_min_eigenvalue(povm);
    if (lowest < -psd_tolerance) {
      throw NumericError("seesaw iteration " + std::to_string(iteration) +
                         ": POVM eigenvalue " + std::to_string(lowest));
    }
    const double defect = povm_completeness_defect(povm);
    if (defect > completeness_tolerance) {
      throw NumericError("seesaw iteration " + std::to_string(iteration) +
                         ": POVM completeness defect " + std::to_string(defect));
    }
  }
}

Povm smoothed_projective_povm(int dimension, int n_outcomes, Rng& rng, bool real_only) {
  const Matrix basis = random_unitary(dimension, rng, real_only);
  Povm povm;
  povm.elements.assign(n_outcomes, Matrix::Zero(dimension, dimension));
  for (int m = 0; m < dimension; ++m) {
    povm.elements[m % n_outcomes] += basis.col(m) * basis.col(m).adjoint();
  }
  const double scale = 1.0 / (1.0 + 0.01 * n_outcomes);
  for (Matrix& element : povm.elements) {
    element = scale * (element + 0.01 * Matrix::Identity(dimension, dimension));
  }
  return povm;
}

struct GeneralState {
  std::vector<Ket> states;
  std::vector<Povm> povms;
};

GeneralState general_step(const WitnessCoefficients& w, const GeneralState& cur,
                          double eps) {
  const Scenario& s = w.scenario;
  const int d = s.dimension;
  const Matrix id = Matrix::Identity(d, d);
  GeneralState next = cur;

  for (int i = 0; i < s.preparations; ++i) {
    Matrix gradient = Matrix::Zero(d, d);
    for (int k = 0; k < s.measurements; ++k) {
      for (int j = 0; j < s.outcomes; ++j) {
        const double coef = w.at(i, k, j);
        if (coef != 0.0) gradient += coef * cur.povms[k].elements[j];
      }
    }
    const Ket phi = (1.0 - eps) * cur.states[i] + eps * (gradient * cur.states[i]);
    const double norm = phi.norm();
    if (norm > 1e-14) next.states[i] = phi / norm;
  }

  std::vector<Matrix> projectors(s.preparations);
  for (int i = 0; i < s.preparations; ++i) projectors[i] = density(cur.states[i]);

  for (int k = 0; k < s.measurements; ++k) {
    std::vector<Matrix> updated(s.outcomes);
    Matrix normalizer = Matrix::Zero(d, d);
    for (int j = 0; j < s.outcomes; ++j) {
      Matrix factor = (1.0 - eps) * id;
      for (int i = 0; i < s.preparations; ++i) {
        const double coef = w.at(i, k, j);
        if (coef != 0.0) factor += (eps * coef) * projectors[i];
      }
      updated[j] = factor * cur.povms[k].elements[j] * factor;
      normalizer += updated[j];
    }
    const Matrix whitener = matrix_inv_sqrt(normalizer);
    for (int j = 0; j < s.outcomes; ++j) {
      next.povms[k].elements[j] = hermitian_part(whitener * updated[j] * whitener);
    }
  }
  return next;
}

struct Rank1State {
  std::vector<Ket> states;
  std::vector<Ket> measurements;
};

double rank1_value(const WitnessCoefficients& w, const Rank1State& st) {
  const Scenario& s = w.scenario;
  double value = 0.0;
  for (int i = 0; i < s.preparations; ++i) {
    for (int k = 0; k < s.measurements; ++k) {
      const double coef = w.at(i, k, 0);
      if (coef != 0.0) value += coef * std::norm(st.measurements[k].dot(st.states[i]));
    }
  }
  return value;
}

Rank1State rank1_step(const WitnessCoefficients& w, const Rank1State& cur, double eps) {
  const Scenario& s = w.scenario;
  Rank1State next = cur;

  for (int i = 0; i < s.preparations; ++i) {
    Ket phi = cur.states[i];
    for (int k = 0; k < s.measurements; ++k) {
      const double coef = w.at(i, k, 0);
      if (coef != 0.0) {
        phi += (eps * coef) * cur.measurements[k].dot(cur.states[i]) * cur.measurements[k];
      }
    }
    const double norm = phi.norm();
    if (norm > 1e-14) next.states[i] = phi / norm;
  }

  for (int k = 0; k < s.measurements; ++k) {
    Ket pointer = cur.measurements[k];
    for (int i = 0; i < s.preparations; ++i) {
      const double coef = w.at(i, k, 0);
      if (coef != 0.0) {
        pointer += (eps * coef) * cur.states[i].dot(cur.measurements[k]) * cur.states[i];
      }
    }
    const double norm = pointer.norm();
    if (norm > 1e-14) next.measurements[k] = pointer / norm;
  }
  return next;
}

std::vector<Povm> rank1_povms(const Scenario& s, const std::vector<Ket>& measurements) {
  const Matrix id = Matrix::Identity(s.dimension, s.dimension);
  std::vector<Povm> povms(s.measurements);
  for (int k = 0; k < s.measurements; ++k) {
    Povm& povm = povms[k];
    povm.elements.assign(s.outcomes, Matrix::Zero(s.dimension, s.dimension));
    const Matrix projector = density(measurements[k]);
    povm.elements[0] = projector;
    povm.elements[1] = id - projector;
  }
  return povms;
}

void require_rank1_shape(const WitnessCoefficients& w) {
  const Scenario& s = w.scenario;
  if (s.outcomes < 2) {
    throw UnsupportedWitnessError(
        "seesaw_rank1: witness needs at least two outcomes");
  }
  for (int i = 0; i < s.preparations; ++i) {
    for (int k = 0; k < s.measurements; ++k) {
      for (int j = 1; j < s.outcomes; ++j) {
        if (w.at(i, k, j) != 0.0) {
          throw UnsupportedWitnessError(
              "seesaw_rank1: witness has nonzero coefficients beyond outcome 1");
        }
      }
    }
  }
}

}  // namespace

void validate(const OptimizerConfig& config) {
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) {
    throw ValidationError("OptimizerConfig: epsilon must lie in (0,1)");
  }
  if (config.max_iterations < 1 || config.window < 1 || config.restarts < 1) {
    throw ValidationError("OptimizerConfig: counts must be at least 1");
  }
  if (!(config.tolerance >= 0.0)) {
    throw ValidationError("OptimizerConfig: tolerance must be nonnegative");
  }
  if (config.threads < 0) {
    throw ValidationError("OptimizerConfig: threads must be nonnegative");
  }
}

OptimizationResult seesaw_general(const WitnessCoefficients& w,
                                  const OptimizerConfig& config,
                                  const std::optional<SeesawInit>& init,
                                  const IterateObserver& observer, int restart_index) {
  validate(w);
  validate(config);
  const Scenario& s = w.scenario;

  GeneralState cur;
  if (init) {
    if (static_cast<int>(init->states.size()) != s.preparations ||
        static_cast<int>(init->povms.size()) != s.measurements) {
      throw ValidationError("seesaw_general: init does not match witness scenario");
    }
    cur.states = init->states;
    cur.povms = init->povms;
  } else {
    Rng rng(mix_seed(config.seed, static_cast<std::uint64_t>(restart_index)));
    cur.states.reserve(s.preparations);
    for (int i = 0; i < s.preparations; ++i) {
      cur.states.push_back(random_ket(s.dimension, rng, config.real_only));
    }
    cur.povms.reserve(s.measurements);
    for (int k = 0; k < s.measurements; ++k) {
      cur.povms.push_back(
          smoothed_projective_povm(s.dimension, s.outcomes, rng, config.real_only));
    }
  }

  double value = evaluate(w, born_probabilities(cur.states, cur.povms));

  OptimizationResult result;
  result.trace.reserve(config.max_iterations + 1);
  result.trace.push_back(value);
  AscentControl control{config.epsilon, config.epsilon};
  StagnationTracker stagnation{config.window, config.tolerance, {}};
  stagnation.start(value);

  int iterations = 0;
  for (int iteration = 1; iteration <= config.max_iterations; ++iteration) {
    iterations = iteration;
    GeneralState candidate = general_step(w, cur, control.epsilon);
    const double candidate_value =
        evaluate(w, born_probabilities(candidate.states, candidate.povms));
    if (candidate_value >= value) {
      cur = std::move(candidate);
      value = candidate_value;
      require_valid_iterate(cur.states, cur.povms, iteration);
      if (observer) observer(iteration, value, cur.states, cur.povms);
      control.on_accept();
    } else {
      control.on_reject();
    }
    result.trace.push_back(value);
    if (stagnation.stagnated(value)) break;
  }

  result.value = value;
  result.states = std::move(cur.states);
  result.povms = std::move(cur.povms);
  result.iterations_used = iterations;
  result.restart_index = restart_index;
  return result;
}

OptimizationResult seesaw_rank1(const WitnessCoefficients& w,
                                const OptimizerConfig& config,
                                const std::optional<Rank1Init>& init,
                                const IterateObserver& observer, int restart_index) {
  validate(w);
  validate(config);
  require_rank1_shape(w);
  const Scenario& s = w.scenario;

  Rank1State cur;
  if (init) {
    if (static_cast<int>(init->states.size()) != s.preparations ||
        static_cast<int>(init->measurement_vectors.size()) != s.measurements) {
      throw ValidationError("seesaw_rank1: init does not match witness scenario");
    }
    cur.states = init->states;
    cur.measurements = init->measurement_vectors;
  } else {
    Rng rng(mix_seed(config.seed, static_cast<std::uint64_t>(restart_index)));
    cur.states.reserve(s.preparations);
    for (int i = 0; i < s.preparations; ++i) {
      cur.states.push_back(random_ket(s.dimension, rng, config.real_only));
    }
    cur.measurements.reserve(s.measurements);
    for (int k = 0; k < s.measurements; ++k) {
      cur.measurements.push_back(random_ket(s.dimension, rng, config.real_only));
    }
  }

  double value = rank1_value(w, cur);

  OptimizationResult result;
  result.trace.reserve(config.max_iterations + 1);
  result.trace.push_back(value);
  AscentControl control{config.epsilon, config.epsilon};
  StagnationTracker stagnation{config.window, config.tolerance, {}};
  stagnation.start(value);

  int iterations = 0;
  for (int iteration = 1; iteration <= config.max_iterations; ++iteration) {
    iterations = iteration;
    Rank1State candidate = rank1_step(w, cur, control.epsilon);
    const double candidate_value = rank1_value(w, candidate);
    if (candidate_value >= value) {
      cur = std::move(candidate);
      value = candidate_value;
      if (observer) {
        observer(iteration, value, cur.states, rank1_povms(s, cur.measurements));
      }
      control.on_accept();
    } else {
      control.on_reject();
    }
    result.trace.push_back(value);
    if (stagnation.stagnated(value)) break;
  }

  result.value = value;
  result.states = std::move(cur.states);
  result.measurement_vectors = cur.measurements;
  result.povms = rank1_povms(s, cur.measurements);
  result.iterations_used = iterations;
  result.restart_index = restart_index;
  return result;
}

OptimizationResult multi_restart(Algorithm algorithm, const WitnessCoefficients& w,
                                 const OptimizerConfig& config) {
  validate(config);
  const int total = config.restarts;
  std::vector<std::optional<OptimizationResult>> outcomes(total);
  std::vector<std::exception_ptr> failures(total);

  int workers = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min(workers, total);

  std::atomic<int> cursor{0};
  auto drain = [&] {
    while (true) {
      const int index = cursor.fetch_add(1);
      if (index >= total) return;
      try {
        outcomes[index] = algorithm == Algorithm::rank1
                              ? seesaw_rank1(w, config, std::nullopt, nullptr, index)
                              : seesaw_general(w, config, std::nullopt, nullptr, index);
      } catch (...) {
        failures[index] = std::current_exception();
      }
    }
  };

  if (workers == 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(drain);
    for (std::thread& thread : pool) thread.join();
  }

  for (int index = 0; index < total; ++index) {
    if (failures[index]) std::rethrow_exception(failures[index]);
  }
  int best = 0;
  for (int index = 1; index < total; ++index) {
    if (outcomes[index]->value > outcomes[best]->value) best = index;
  }
  return std::move(*outcomes[best]);
}

}  // namespace dimwit
