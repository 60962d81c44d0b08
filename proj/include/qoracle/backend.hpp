#pragma once

#include <memory>
#include <string>
#include <utility>

#include "qoracle/circuit.hpp"
#include "qoracle/state.hpp"

namespace qoracle {

// Execution seam. The correct backend delegates straight to apply_gate;
// fault-injected variants override step/finalize to misbehave on purpose.
// One instance serves one execution at a time; fork() hands out a fresh
// instance with the same behavior and reset internal state.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual std::string id() const = 0;
  virtual std::unique_ptr<Backend> fork() const = 0;

  virtual StateVector initial_state(int num_qubits) const;
  virtual StateVector step(const StateVector& state,
                           const GateInstruction& instruction) = 0;
  virtual std::pair<StateVector, ProbabilityDistribution> finalize(
      const StateVector& state) const;
};

class CorrectBackend final : public Backend {
 public:
  std::string id() const override { return "correct"; }
  std::unique_ptr<Backend> fork() const override;
  StateVector step(const StateVector& state,
                   const GateInstruction& instruction) override;
};

}  // namespace qoracle
