#include "qoracle/state.hpp"

#include <cmath>

namespace qoracle {

namespace {

void require_valid_width(int num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxQubits) {
    throw StructuralError("qubit count " + std::to_string(num_qubits) +
                          " outside [0, " + std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

StateVector make_zero_state(int num_qubits) {
  return make_basis_state(num_qubits, 0);
}

StateVector make_basis_state(int num_qubits, std::uint64_t basis_index) {
  require_valid_width(num_qubits);
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (basis_index >= dim) {
    throw StructuralError("basis index " + std::to_string(basis_index) +
                          " out of range for " + std::to_string(num_qubits) +
                          " qubits");
  }
  StateVector state{num_qubits, CVector::Zero(static_cast<Eigen::Index>(dim))};
  state.amplitudes[static_cast<Eigen::Index>(basis_index)] = Complex(1, 0);
  return state;
}

Real norm_squared(const StateVector& state) {
  return state.amplitudes.squaredNorm();
}

bool is_normalized(const StateVector& state, Real eps) {
  return std::abs(norm_squared(state) - 1.0) <= eps;
}

ProbabilityDistribution measurement_distribution(const StateVector& state) {
  return state.amplitudes.cwiseAbs2();
}

Real fidelity(const StateVector& a, const StateVector& b) {
  if (a.num_qubits != b.num_qubits) {
    throw StructuralError("fidelity undefined for widths " +
                          std::to_string(a.num_qubits) + " and " +
                          std::to_string(b.num_qubits));
  }
  // Eigen's dot conjugates the left operand, so this is <a|b>.
  return std::norm(a.amplitudes.dot(b.amplitudes));
}

StateVector apply_gate(const StateVector& state, const GateMatrix& gate,
                       std::span<const int> targets) {
  if (static_cast<int>(targets.size()) != gate.arity) {
    throw StructuralError("gate of arity " + std::to_string(gate.arity) +
                          " applied to " + std::to_string(targets.size()) +
                          " target(s)");
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= state.num_qubits) {
      throw WidthViolationError(
          "target qubit " + std::to_string(targets[i]) +
          " out of range for width " + std::to_string(state.num_qubits));
    }
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      if (targets[i] == targets[j]) {
        throw StructuralError("duplicate target qubit " +
                              std::to_string(targets[i]));
      }
    }
  }

  StateVector out{state.num_qubits, state.amplitudes};
  const std::uint64_t dim =
      static_cast<std::uint64_t>(state.amplitudes.size());

  if (gate.arity == 1) {
    const std::uint64_t bit = std::uint64_t{1} << targets[0];
    const Complex m00 = gate.entries(0, 0), m01 = gate.entries(0, 1);
    const Complex m10 = gate.entries(1, 0), m11 = gate.entries(1, 1);
    for (std::uint64_t base = 0; base < dim; ++base) {
      if (base & bit) continue;
      const Complex a0 = out.amplitudes[static_cast<Eigen::Index>(base)];
      const Complex a1 = out.amplitudes[static_cast<Eigen::Index>(base | bit)];
      out.amplitudes[static_cast<Eigen::Index>(base)] = m00 * a0 + m01 * a1;
      out.amplitudes[static_cast<Eigen::Index>(base | bit)] =
          m10 * a0 + m11 * a1;
    }
    return out;
  }

  // targets[0] is the high bit of the local index.
  const std::uint64_t hi = std::uint64_t{1} << targets[0];
  const std::uint64_t lo = std::uint64_t{1} << targets[1];
  Eigen::Matrix<Complex, 4, 1> local;
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & (hi | lo)) continue;
    const std::uint64_t idx[4] = {base, base | lo, base | hi, base | hi | lo};
    for (int k = 0; k < 4; ++k) {
      local[k] = out.amplitudes[static_cast<Eigen::Index>(idx[k])];
    }
    const Eigen::Matrix<Complex, 4, 1> mixed = gate.entries * local;
    for (int k = 0; k < 4; ++k) {
      out.amplitudes[static_cast<Eigen::Index>(idx[k])] = mixed[k];
    }
  }
  return out;
}

Fingerprint canonical_fingerprint(const StateVector& state, Real grid) {
  if (grid <= 0) {
    throw StructuralError("fingerprint grid must be positive");
  }
  const Eigen::Index dim = state.amplitudes.size();
  Eigen::Index anchor = -1;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (std::abs(state.amplitudes[i]) > grid) {
      anchor = i;
      break;
    }
  }
  if (anchor < 0) {
    throw StructuralError(
        "cannot fingerprint a state with no amplitude above the grid");
  }
  const Complex a = state.amplitudes[anchor];
  const Complex phase = std::conj(a) / std::abs(a);

  Fingerprint fp;
  fp.cells.reserve(static_cast<std::size_t>(2 * dim));
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Complex v = state.amplitudes[i] * phase;
    fp.cells.push_back(std::llround(v.real() / grid));
    fp.cells.push_back(std::llround(v.imag() / grid));
  }
  return fp;
}

}  // namespace qoracle
