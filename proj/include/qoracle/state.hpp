#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "qoracle/gates.hpp"
#include "qoracle/types.hpp"

namespace qoracle {

// Pure state of num_qubits qubits as 2^num_qubits complex amplitudes.
// Qubit q is bit q of the basis index (qubit 0 is the least significant
// bit). num_qubits is stored, not derived, so that a faulty backend can
// hand back an inconsistent state and the width oracle can observe it.
struct StateVector {
  int num_qubits = 0;
  CVector amplitudes;
};

StateVector make_zero_state(int num_qubits);
StateVector make_basis_state(int num_qubits, std::uint64_t basis_index);

Real norm_squared(const StateVector& state);
bool is_normalized(const StateVector& state, Real eps = kEpsilonNorm);

// |amplitude|^2 per basis state. No validity check; judging the result is
// the probability oracle's job.
ProbabilityDistribution measurement_distribution(const StateVector& state);

// |<a|b>|^2. Throws StructuralError on width mismatch.
Real fidelity(const StateVector& a, const StateVector& b);

// Applies the unitary to the listed qubits, leaving the rest untouched.
// targets[0] is the most significant bit of the gate's local basis index,
// so for cx the control comes first. Throws WidthViolationError for
// out-of-range targets and StructuralError for duplicates or an arity
// mismatch.
StateVector apply_gate(const StateVector& state, const GateMatrix& gate,
                       std::span<const int> targets);

// Comparable global-phase-invariant digest of a state on a rounding grid.
struct Fingerprint {
  std::vector<std::int64_t> cells;

  auto operator<=>(const Fingerprint&) const = default;
};

// Fixes global phase by rotating the first amplitude with modulus > grid
// to the positive real axis, then rounds each component to the nearest
// grid multiple. Throws StructuralError when no amplitude clears the grid.
Fingerprint canonical_fingerprint(const StateVector& state, Real grid);

}  // namespace qoracle
