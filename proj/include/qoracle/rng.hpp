#pragma once

#include <cstdint>

#include "qoracle/state.hpp"

namespace qoracle {

// splitmix64. Hand rolled so that streams are bit-identical across
// platforms and standard library versions; reproducibility of campaigns
// depends on it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // [0, 1)
  double uniform();
  double uniform(double lo, double hi);

  // [0, bound)
  std::uint64_t below(std::uint64_t bound);

  // [lo, hi] inclusive
  int range(int lo, int hi);

  // standard normal via Box-Muller
  double gaussian();

 private:
  std::uint64_t state_;
};

// Stable per-trial seed derivation.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

// Normalized state with iid Gaussian components.
StateVector random_state(int num_qubits, Rng& rng);

}  // namespace qoracle
