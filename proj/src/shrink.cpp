#include "qoracle/shrink.hpp"

#include <algorithm>
#include <cmath>

namespace qoracle {

namespace {

// Removes aligned windows of `chunk` instructions while the predicate
// keeps failing. Returns true when anything was removed.
bool removal_pass(Circuit& current, std::size_t chunk,
                  const FailingPredicate& still_failing) {
  bool removed = false;
  std::size_t start = 0;
  while (start < current.instructions.size()) {
    Circuit candidate = current;
    const auto first =
        candidate.instructions.begin() + static_cast<std::ptrdiff_t>(start);
    const auto last =
        candidate.instructions.begin() +
        static_cast<std::ptrdiff_t>(
            std::min(start + chunk, candidate.instructions.size()));
    candidate.instructions.erase(first, last);
    if (still_failing(candidate)) {
      current = std::move(candidate);
      removed = true;
      // The tail shifted into place; retest the same position.
    } else {
      start += chunk;
    }
  }
  return removed;
}

void simplify_angles(Circuit& current, const FailingPredicate& still_failing) {
  constexpr Real kHalfPi = M_PI / 2.0;
  for (GateInstruction& instr : current.instructions) {
    for (std::size_t p = 0; p < instr.params.size(); ++p) {
      const Real original = instr.params[p];
      const Real snapped = std::round(original / kHalfPi) * kHalfPi;
      for (Real candidate : {0.0, snapped}) {
        if (candidate == original) continue;
        instr.params[p] = candidate;
        if (still_failing(current)) {
          break;  // keep the simpler angle
        }
        instr.params[p] = original;
      }
    }
  }
}

}  // namespace

Circuit shrink(const Circuit& circuit, const FailingPredicate& still_failing) {
  if (!still_failing(circuit)) {
    throw StructuralError("shrink requires a circuit the predicate fails on");
  }

  Circuit current = circuit;
  std::size_t chunk = std::max<std::size_t>(current.instructions.size() / 2, 1);
  while (true) {
    const bool removed = removal_pass(current, chunk, still_failing);
    if (removed) {
      chunk = std::max<std::size_t>(
          std::min(chunk, current.instructions.size() / 2), 1);
      continue;
    }
    if (chunk == 1) break;
    chunk /= 2;
  }

  simplify_angles(current, still_failing);

  // Simpler angles can unlock further deletions; run single removals to a
  // fixed point so the result is 1-minimal.
  while (removal_pass(current, 1, still_failing)) {
  }
  return current;
}

bool is_one_minimal(const Circuit& circuit,
                    const FailingPredicate& still_failing) {
  if (!still_failing(circuit)) return false;
  for (std::size_t i = 0; i < circuit.instructions.size(); ++i) {
    Circuit candidate = circuit;
    candidate.instructions.erase(candidate.instructions.begin() +
                                 static_cast<std::ptrdiff_t>(i));
    if (still_failing(candidate)) return false;
  }
  return true;
}

}  // namespace qoracle
