#include "qoracle/simulate.hpp"

#include <cmath>

#include "qoracle/rng.hpp"

namespace qoracle {

ExecutionTrace run_forward(const Circuit& circuit, const StateVector& input,
                           Backend& backend, bool trace_states) {
  if (input.num_qubits != circuit.num_qubits) {
    throw StructuralError("input width " + std::to_string(input.num_qubits) +
                          " does not match circuit width " +
                          std::to_string(circuit.num_qubits));
  }

  ExecutionTrace trace;
  trace.circuit = circuit;
  trace.backend_id = backend.id();
  trace.states.push_back(input);

  StateVector state = input;
  for (std::size_t i = 0; i < circuit.instructions.size(); ++i) {
    try {
      state = backend.step(state, circuit.instructions[i]);
    } catch (SimulationError& e) {
      if (!e.instruction_index.has_value()) {
        e.instruction_index = static_cast<int>(i);
      }
      throw;
    }
    if (trace_states) {
      trace.states.push_back(state);
    }
  }
  if (!trace_states && !circuit.instructions.empty()) {
    trace.states.push_back(state);
  }

  auto [final_state, distribution] = backend.finalize(state);
  trace.final_state = std::move(final_state);
  trace.final_distribution = std::move(distribution);
  return trace;
}

RoundTripResult run_roundtrip(const Circuit& circuit, const StateVector& input,
                              Backend& backend) {
  RoundTripResult result;
  const ExecutionTrace forward = run_forward(circuit, input, backend, false);
  result.output = forward.final_state;
  const ExecutionTrace backward =
      run_forward(inverse(circuit), result.output, backend, false);
  result.recovered = backward.final_state;
  result.fidelity = fidelity(input, result.recovered);
  return result;
}

std::map<std::uint64_t, std::uint64_t> sample_measurements(
    const ExecutionTrace& trace, std::uint64_t shots, std::uint64_t seed) {
  const ProbabilityDistribution& dist = trace.final_distribution;
  if (dist.size() == 0) {
    throw DistributionInvalidError("trace has no final distribution");
  }

  Real sum = 0.0;
  for (Eigen::Index i = 0; i < dist.size(); ++i) {
    const Real p = dist[i];
    if (!std::isfinite(p) || p < -kEpsilonNorm || p > 1.0 + kEpsilonNorm) {
      throw DistributionInvalidError(
          "distribution entry " + std::to_string(i) + " is " +
          std::to_string(p) + "; refusing to sample");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kEpsilonNorm) {
    throw DistributionInvalidError("distribution sums to " +
                                   std::to_string(sum) +
                                   "; refusing to sample");
  }

  std::map<std::uint64_t, std::uint64_t> histogram;
  Rng rng(seed);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const Real u = rng.uniform() * sum;
    Real cumulative = 0.0;
    std::uint64_t outcome = static_cast<std::uint64_t>(dist.size()) - 1;
    for (Eigen::Index i = 0; i < dist.size(); ++i) {
      cumulative += std::max<Real>(dist[i], 0.0);
      if (u < cumulative) {
        outcome = static_cast<std::uint64_t>(i);
        break;
      }
    }
    ++histogram[outcome];
  }
  return histogram;
}

}  // namespace qoracle
