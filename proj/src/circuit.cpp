#include "qoracle/circuit.hpp"

#include <algorithm>
#include <cmath>

namespace qoracle {

void validate_circuit(const Circuit& circuit) {
  if (circuit.num_qubits < 1 || circuit.num_qubits > kMaxQubits) {
    throw StructuralError("circuit width " +
                          std::to_string(circuit.num_qubits) +
                          " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
  for (std::size_t i = 0; i < circuit.instructions.size(); ++i) {
    const GateInstruction& instr = circuit.instructions[i];
    const GateInfo* info = find_gate(instr.gate_name);
    if (info == nullptr) {
      throw StructuralError("instruction " + std::to_string(i) +
                            ": unknown gate '" + instr.gate_name + "'");
    }
    if (static_cast<int>(instr.params.size()) != info->param_count) {
      throw StructuralError("instruction " + std::to_string(i) + ": gate '" +
                            instr.gate_name + "' takes " +
                            std::to_string(info->param_count) +
                            " parameter(s)");
    }
    if (static_cast<int>(instr.targets.size()) != info->arity) {
      throw StructuralError("instruction " + std::to_string(i) + ": gate '" +
                            instr.gate_name + "' takes " +
                            std::to_string(info->arity) + " target(s)");
    }
    for (std::size_t a = 0; a < instr.targets.size(); ++a) {
      if (instr.targets[a] < 0 || instr.targets[a] >= circuit.num_qubits) {
        throw WidthViolationError(
            "instruction " + std::to_string(i) + ": target qubit " +
            std::to_string(instr.targets[a]) + " out of range for width " +
            std::to_string(circuit.num_qubits));
      }
      for (std::size_t b = a + 1; b < instr.targets.size(); ++b) {
        if (instr.targets[a] == instr.targets[b]) {
          throw StructuralError("instruction " + std::to_string(i) +
                                ": duplicate target qubit " +
                                std::to_string(instr.targets[a]));
        }
      }
    }
    for (Real p : instr.params) {
      if (!std::isfinite(p)) {
        throw StructuralError("instruction " + std::to_string(i) +
                              ": non-finite angle");
      }
    }
  }
}

GateMatrix instruction_matrix(const GateInstruction& instruction) {
  return gate_matrix(instruction.gate_name, instruction.params);
}

Circuit inverse(const Circuit& circuit) {
  Circuit inv;
  inv.num_qubits = circuit.num_qubits;
  inv.instructions.reserve(circuit.instructions.size());
  for (auto it = circuit.instructions.rbegin();
       it != circuit.instructions.rend(); ++it) {
    const GateInfo* info = find_gate(it->gate_name);
    if (info == nullptr) {
      throw StructuralError("cannot invert unknown gate '" + it->gate_name +
                            "'");
    }
    GateInstruction instr;
    instr.gate_name = info->inverse_name;
    instr.targets = it->targets;
    instr.params = it->params;
    if (info->negate_params) {
      for (Real& p : instr.params) p = -p;
    }
    inv.instructions.push_back(std::move(instr));
  }
  return inv;
}

bool structurally_equal(const Circuit& a, const Circuit& b, Real angle_tol) {
  if (a.num_qubits != b.num_qubits) return false;
  if (a.instructions.size() != b.instructions.size()) return false;
  for (std::size_t i = 0; i < a.instructions.size(); ++i) {
    const GateInstruction& x = a.instructions[i];
    const GateInstruction& y = b.instructions[i];
    if (x.gate_name != y.gate_name) return false;
    if (x.targets != y.targets) return false;
    if (x.params.size() != y.params.size()) return false;
    for (std::size_t p = 0; p < x.params.size(); ++p) {
      if (std::abs(x.params[p] - y.params[p]) > angle_tol) return false;
    }
  }
  return true;
}

}  // namespace qoracle
