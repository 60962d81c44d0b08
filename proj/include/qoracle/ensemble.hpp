#pragma once

#include <vector>

#include "qoracle/state.hpp"
#include "qoracle/tolerance.hpp"

namespace qoracle {

struct EnsembleMember {
  StateVector input;
  Real weight = 0.0;
};

// Weighted set of input states. The entropy oracle treats it as a
// distribution over circuit runs: post_measurement false compares
// distinct output states, true compares classical outcome mixtures.
struct Ensemble {
  std::vector<EnsembleMember> members;
  bool post_measurement = false;
};

// Non-negative weights summing to 1 within epsilon_sum, equal widths,
// at least one member. Throws StructuralError.
void validate_ensemble(const Ensemble& ensemble, const ToleranceConfig& tol);

// The min(2^n, 16) lowest computational basis states, uniform weights.
Ensemble default_ensemble(int num_qubits, bool post_measurement = false);

}  // namespace qoracle
