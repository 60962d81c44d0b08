#include "qoracle/rng.hpp"

#include <cmath>

namespace qoracle {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::uint64_t Rng::below(std::uint64_t bound) {
  return bound == 0 ? 0 : next() % bound;
}

int Rng::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::gaussian() {
  // Box-Muller; u1 kept away from zero so the log is finite.
  const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  Rng mixer(base ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  return mixer.next();
}

StateVector random_state(int num_qubits, Rng& rng) {
  StateVector state = make_zero_state(num_qubits);
  for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
    state.amplitudes[i] = Complex(rng.gaussian(), rng.gaussian());
  }
  state.amplitudes.normalize();
  return state;
}

}  // namespace qoracle
