#pragma once

#include "qoracle/types.hpp"

namespace qoracle {

// Numeric slack for every oracle. Defaults sit comfortably above double
// accumulation error at 16 qubits and depth 1000.
struct ToleranceConfig {
  Real epsilon_prob = 1e-9;      // per-entry range slack
  Real epsilon_sum = 1e-9;       // |sum - 1| slack
  Real epsilon_fidelity = 1e-9;  // round-trip fidelity slack
  Real epsilon_entropy = 1e-6;   // bits
  Real fingerprint_grid = 1e-6;  // state equality rounding grid
};

// All entries must be strictly positive and at most 1e-3; anything looser
// is treated as a misconfiguration. Throws StructuralError.
void validate_tolerances(const ToleranceConfig& tol);

}  // namespace qoracle
