#pragma once

#include <cstdint>
#include <map>

#include "qoracle/backend.hpp"
#include "qoracle/circuit.hpp"
#include "qoracle/state.hpp"

namespace qoracle {

// Record of one execution. With tracing, states holds the initial state
// plus one entry per instruction; without, only initial and final. The
// states are stored exactly as the backend produced them, including
// inconsistent widths, so the oracles get an honest view.
struct ExecutionTrace {
  Circuit circuit;
  std::vector<StateVector> states;
  StateVector final_state;  // after Backend::finalize
  ProbabilityDistribution final_distribution;
  std::string backend_id;
};

// Applies the instructions in order through backend.step. Backend errors
// propagate with instruction_index set to where they occurred.
ExecutionTrace run_forward(const Circuit& circuit, const StateVector& input,
                           Backend& backend, bool trace_states);

struct RoundTripResult {
  StateVector output;     // after the forward pass
  StateVector recovered;  // after running the inverse circuit on output
  Real fidelity = 0.0;    // overlap of recovered with the original input
};

// Runs circuit forward, then inverse(circuit) forward on the result, both
// through the same backend instance.
RoundTripResult run_roundtrip(const Circuit& circuit, const StateVector& input,
                              Backend& backend);

// Draws shots independent outcomes from the trace's final distribution
// with a self-contained seeded generator. Refuses (DistributionInvalidError)
// when the distribution violates the probability invariants at the default
// tolerances.
std::map<std::uint64_t, std::uint64_t> sample_measurements(
    const ExecutionTrace& trace, std::uint64_t shots, std::uint64_t seed);

}  // namespace qoracle
