#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qoracle {

// Single scalar knob for the numeric core. Everything downstream is built
// from these aliases.
using Real = double;
using Complex = std::complex<Real>;
using CVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// One probability per basis state, length 2^n.
using ProbabilityDistribution = RVector;

inline constexpr Real kEpsilonNorm = 1e-9;
inline constexpr Real kEpsilonUnitary = 1e-10;
inline constexpr int kMaxQubits = 16;

// Base for everything that can go wrong while executing a circuit. The
// execution loop stamps the instruction index when an error surfaces
// mid-circuit.
class SimulationError : public std::runtime_error {
 public:
  explicit SimulationError(const std::string& what)
      : std::runtime_error(what) {}

  std::optional<int> instruction_index;
};

// A qubit index outside the declared register.
class WidthViolationError : public SimulationError {
 public:
  using SimulationError::SimulationError;
};

// Contract misuse: arity mismatch, duplicate targets, width mismatch
// between arguments, degenerate state.
class StructuralError : public SimulationError {
 public:
  using SimulationError::SimulationError;
};

// A distribution too malformed to sample from.
class DistributionInvalidError : public SimulationError {
 public:
  using SimulationError::SimulationError;
};

}  // namespace qoracle
