#include "qoracle/ensemble.hpp"

#include <cmath>

namespace qoracle {

void validate_ensemble(const Ensemble& ensemble, const ToleranceConfig& tol) {
  if (ensemble.members.empty()) {
    throw StructuralError("ensemble has no members");
  }
  const int width = ensemble.members.front().input.num_qubits;
  Real sum = 0.0;
  for (const EnsembleMember& member : ensemble.members) {
    if (member.input.num_qubits != width) {
      throw StructuralError("ensemble members disagree on width");
    }
    if (!(member.weight >= 0.0) || !std::isfinite(member.weight)) {
      throw StructuralError("ensemble weight must be non-negative");
    }
    sum += member.weight;
  }
  if (std::abs(sum - 1.0) > tol.epsilon_sum) {
    throw StructuralError("ensemble weights sum to " + std::to_string(sum));
  }
}

Ensemble default_ensemble(int num_qubits, bool post_measurement) {
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  const std::uint64_t count = std::min<std::uint64_t>(dim, 16);
  Ensemble ensemble;
  ensemble.post_measurement = post_measurement;
  ensemble.members.reserve(count);
  const Real weight = 1.0 / static_cast<Real>(count);
  for (std::uint64_t index = 0; index < count; ++index) {
    ensemble.members.push_back({make_basis_state(num_qubits, index), weight});
  }
  return ensemble;
}

}  // namespace qoracle
