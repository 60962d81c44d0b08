#pragma once

#include <functional>

#include "qoracle/circuit.hpp"

namespace qoracle {

using FailingPredicate = std::function<bool(const Circuit&)>;

// Delta-debugs the instruction list while the predicate keeps failing,
// then simplifies surviving angles toward 0 and multiples of pi/2. The
// result is 1-minimal: removing any single instruction makes the
// predicate pass. Throws StructuralError when the predicate does not
// fail on the input.
Circuit shrink(const Circuit& circuit, const FailingPredicate& still_failing);

// Re-checks 1-minimality by deleting each instruction in turn.
bool is_one_minimal(const Circuit& circuit,
                    const FailingPredicate& still_failing);

}  // namespace qoracle
