#pragma once

// Deliberately wrong backends used only by tests.

#include "qoracle/backend.hpp"

namespace qoracle::testing {

// Replaces h's action with a projection of the target qubit onto |0>
// followed by renormalization. Non-unitary by construction.
class ProjectorBackend final : public Backend {
 public:
  std::string id() const override { return "projector"; }
  std::unique_ptr<Backend> fork() const override {
    return std::make_unique<ProjectorBackend>();
  }
  StateVector step(const StateVector& state,
                   const GateInstruction& instruction) override {
    if (instruction.gate_name != "h") {
      return apply_gate(state, instruction_matrix(instruction),
                        instruction.targets);
    }
    StateVector out = state;
    const std::uint64_t bit = std::uint64_t{1} << instruction.targets.at(0);
    for (Eigen::Index i = 0; i < out.amplitudes.size(); ++i) {
      if (static_cast<std::uint64_t>(i) & bit) {
        out.amplitudes[i] = Complex(0, 0);
      }
    }
    const Real norm = out.amplitudes.norm();
    if (norm > 1e-150) {
      out.amplitudes /= norm;
    } else {
      out = make_zero_state(out.num_qubits);
    }
    return out;
  }
};

// Correct steps, but finalize moves every amplitude from basis index i to
// basis index i/2. With basis-state inputs this realizes an integer
// divide-by-two, the classic lossy classical map.
class DivideByTwoBackend final : public Backend {
 public:
  std::string id() const override { return "divide_by_two"; }
  std::unique_ptr<Backend> fork() const override {
    return std::make_unique<DivideByTwoBackend>();
  }
  StateVector step(const StateVector& state,
                   const GateInstruction& instruction) override {
    return apply_gate(state, instruction_matrix(instruction),
                      instruction.targets);
  }
  std::pair<StateVector, ProbabilityDistribution> finalize(
      const StateVector& state) const override {
    StateVector mapped{state.num_qubits,
                       CVector::Zero(state.amplitudes.size())};
    for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
      mapped.amplitudes[i / 2] += state.amplitudes[i];
    }
    return {mapped, measurement_distribution(mapped)};
  }
};

// Correct steps, but finalize merges basis index 1 into basis index 0,
// collapsing exactly one pair of basis inputs to the same output.
class PairMergeBackend final : public Backend {
 public:
  std::string id() const override { return "pair_merge"; }
  std::unique_ptr<Backend> fork() const override {
    return std::make_unique<PairMergeBackend>();
  }
  StateVector step(const StateVector& state,
                   const GateInstruction& instruction) override {
    return apply_gate(state, instruction_matrix(instruction),
                      instruction.targets);
  }
  std::pair<StateVector, ProbabilityDistribution> finalize(
      const StateVector& state) const override {
    StateVector mapped = state;
    if (mapped.amplitudes.size() >= 2) {
      mapped.amplitudes[0] += mapped.amplitudes[1];
      mapped.amplitudes[1] = Complex(0, 0);
    }
    return {mapped, measurement_distribution(mapped)};
  }
};

}  // namespace qoracle::testing
