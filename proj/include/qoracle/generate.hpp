#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qoracle/circuit.hpp"
#include "qoracle/rng.hpp"

namespace qoracle {

enum class AngleDistribution {
  kUniform,    // uniform over [0, 2*pi)
  kPiQuarter,  // multiples of pi/4, stable under shrinking
};

struct GeneratorConfig {
  int min_qubits = 2;
  int max_qubits = 6;
  int min_depth = 1;
  int max_depth = 30;
  // Name -> weight over the generated set. Empty means uniform over the
  // standard set minus sdg/tdg (those only appear through inversion).
  std::map<std::string, Real> gate_weights;
  AngleDistribution angle_distribution = AngleDistribution::kPiQuarter;
  std::uint64_t seed = 0;
};

// Bounds ordered and within [1, kMaxQubits], depths non-negative, at
// least one positive weight naming a known gate. Throws StructuralError.
void validate_config(const GeneratorConfig& config);

// Width and depth drawn uniformly from the configured ranges, gates by
// weight (restricted to arities that fit the width), targets uniform
// without replacement. Deterministic in the rng state.
Circuit generate_circuit(const GeneratorConfig& config, Rng& rng);

// One random edit: insert, delete, swap, angle perturbation by
// uniform(-0.1, 0.1), or retarget. Falls back to insert when the chosen
// edit has nothing to act on. Never changes num_qubits.
Circuit mutate_circuit(const Circuit& circuit, Rng& rng);

}  // namespace qoracle
