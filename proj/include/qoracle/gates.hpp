#pragma once

#include <span>
#include <string_view>

#include "qoracle/types.hpp"

namespace qoracle {

// A 1- or 2-qubit unitary in dense form. Library gates are constructed
// internally; arbitrary matrices must come through validated_unitary().
struct GateMatrix {
  int arity = 1;
  CMatrix entries;
};

// max |U†U - I| over all entries.
Real unitarity_defect(const CMatrix& entries);

// Wraps a user-supplied matrix after checking shape (2x2 or 4x4) and
// unitarity within kEpsilonUnitary. Throws StructuralError otherwise.
GateMatrix validated_unitary(const CMatrix& entries);

struct GateInfo {
  const char* name;          // lowercase identifier, also the QASM spelling
  int arity;                 // 1 or 2
  int param_count;           // number of angle parameters
  const char* inverse_name;  // gate realizing the inverse
  bool negate_params;        // inverse takes negated angles
};

// Fixed gate set: id, x, y, z, h, s, sdg, t, tdg, rx, ry, rz, cx, cz, swap.
// sdg/tdg exist so that circuit inversion stays closed over the set.
std::span<const GateInfo> standard_gates();

// nullptr when the name is not in the set.
const GateInfo* find_gate(std::string_view name);

// Builds the matrix for a named gate. Throws StructuralError on unknown
// names or wrong parameter counts.
GateMatrix gate_matrix(std::string_view name, std::span<const Real> params);

}  // namespace qoracle
