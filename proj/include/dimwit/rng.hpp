#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "dimwit/types.hpp"

namespace dimwit {

// splitmix64-style combiner; stream n of a seed is mix_seed(seed, n).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic generator: raw mt19937_64 bits mapped to doubles by hand so
// results do not depend on the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // uniform in (0, 1]
  double uniform_positive() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  // standard normal via Box-Muller
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform_positive()));
    const double angle = 2.0 * M_PI * uniform();
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Normalized Gaussian vector; components real when real_only.
Ket random_ket(int dimension, Rng& rng, bool real_only = false);

// QR of a Gaussian matrix with phase-fixed diagonal (orthogonal when real_only).
Matrix random_unitary(int dimension, Rng& rng, bool real_only = false);

}  // namespace dimwit
