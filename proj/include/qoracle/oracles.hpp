#pragma once

#include <cstdint>
#include <span>

#include "qoracle/backend.hpp"
#include "qoracle/ensemble.hpp"
#include "qoracle/simulate.hpp"
#include "qoracle/tolerance.hpp"
#include "qoracle/verdict.hpp"

namespace qoracle {

// The four checks below never throw on bad data; malformed input is their
// subject matter and yields a failing verdict. Only contract misuse (for
// example mismatched widths between arguments) raises errors.

// Every entry within [-epsilon_prob, 1 + epsilon_prob] and the sum within
// epsilon_sum of 1. Records min_prob, max_prob, sum.
OracleVerdict check_probability(const ProbabilityDistribution& distribution,
                                const ToleranceConfig& tol);

// Every recorded state declares the circuit's qubit count and carries
// 2^num_qubits amplitudes. Location is the first offending instruction.
OracleVerdict check_width(const ExecutionTrace& trace);

enum class Granularity {
  kWhole,     // one round trip over the full circuit
  kPerGate,   // each instruction round-tripped in place
  kFragments  // random contiguous sub-ranges
};

struct ReversibilityOptions {
  Granularity granularity = Granularity::kWhole;
  int fragment_count = 5;
  std::uint64_t fragment_seed = 0;
};

// Round-trips the chosen units for every test input on forks of the given
// backend and passes when every recovered fidelity reaches
// 1 - epsilon_fidelity. Structural failures during execution count as
// violations, with the instruction index as location.
OracleVerdict check_reversibility(const Circuit& circuit,
                                  std::span<const StateVector> inputs,
                                  const Backend& backend,
                                  const ToleranceConfig& tol,
                                  const ReversibilityOptions& options = {});

// -sum w log2 w over member weights; zero weights contribute nothing.
Real ensemble_entropy_in(const Ensemble& ensemble);

// Runs every member through the circuit. Without measurement the outputs
// are grouped by canonical fingerprint and the entropy of the group masses
// is returned; with measurement the exact outcome mixture over basis
// states is used instead.
Real ensemble_entropy_out(const Ensemble& ensemble, const Circuit& circuit,
                          const Backend& backend, const ToleranceConfig& tol);

// Reversible mode fails on any entropy change beyond epsilon_entropy;
// post-measurement mode fails only on an increase. Records entropy_in and
// entropy_out.
OracleVerdict check_entropy(const Ensemble& ensemble, const Circuit& circuit,
                            const Backend& backend,
                            const ToleranceConfig& tol);

// -sum p log2 p in bits over any nonnegative masses; zeros are skipped.
Real shannon_entropy_bits(std::span<const Real> masses);

}  // namespace qoracle
