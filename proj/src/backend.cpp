#include "qoracle/backend.hpp"

namespace qoracle {

StateVector Backend::initial_state(int num_qubits) const {
  return make_zero_state(num_qubits);
}

std::pair<StateVector, ProbabilityDistribution> Backend::finalize(
    const StateVector& state) const {
  return {state, measurement_distribution(state)};
}

std::unique_ptr<Backend> CorrectBackend::fork() const {
  return std::make_unique<CorrectBackend>();
}

StateVector CorrectBackend::step(const StateVector& state,
                                 const GateInstruction& instruction) {
  return apply_gate(state, instruction_matrix(instruction),
                    instruction.targets);
}

}  // namespace qoracle
