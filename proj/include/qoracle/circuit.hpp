#pragma once

#include <string>
#include <vector>

#include "qoracle/gates.hpp"
#include "qoracle/types.hpp"

namespace qoracle {

struct GateInstruction {
  std::string gate_name;
  std::vector<Real> params;  // angles in radians
  std::vector<int> targets;  // distinct qubit indices
};

struct Circuit {
  int num_qubits = 0;
  std::vector<GateInstruction> instructions;
};

// Enforces the static invariants: known gates, matching parameter counts,
// distinct in-range targets, positive width within kMaxQubits. Throws
// StructuralError or WidthViolationError.
void validate_circuit(const Circuit& circuit);

// Dense matrix for one instruction.
GateMatrix instruction_matrix(const GateInstruction& instruction);

// Reversed instruction list with every gate replaced by its inverse.
Circuit inverse(const Circuit& circuit);

// Same gates, targets, and angles within angle_tol.
bool structurally_equal(const Circuit& a, const Circuit& b,
                        Real angle_tol = 1e-12);

}  // namespace qoracle
