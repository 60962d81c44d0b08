#pragma once

// Reference entropy computation used to cross-check the fingerprint-based
// grouping: outputs are clustered by pairwise fidelity instead, with no
// canonicalization involved.

#include <numeric>
#include <vector>

#include "qoracle/oracles.hpp"

namespace qoracle::testing {

inline Real brute_force_entropy_out(const Ensemble& ensemble,
                                    const Circuit& circuit,
                                    const Backend& backend,
                                    Real same_class_fidelity = 1.0 - 1e-6) {
  std::vector<StateVector> outputs;
  std::vector<Real> weights;
  for (const EnsembleMember& member : ensemble.members) {
    if (member.weight <= 0.0) continue;
    auto runner = backend.fork();
    outputs.push_back(
        run_forward(circuit, member.input, *runner, false).final_state);
    weights.push_back(member.weight);
  }

  const std::size_t count = outputs.size();
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (outputs[i].num_qubits != outputs[j].num_qubits) continue;
      if (fidelity(outputs[i], outputs[j]) > same_class_fidelity) {
        parent[find(i)] = find(j);
      }
    }
  }

  std::vector<Real> masses(count, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    masses[find(i)] += weights[i];
  }
  masses.erase(std::remove(masses.begin(), masses.end(), 0.0), masses.end());
  return shannon_entropy_bits(masses);
}

}  // namespace qoracle::testing
