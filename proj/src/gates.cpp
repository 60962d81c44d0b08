#include "qoracle/gates.hpp"

#include <array>
#include <cmath>

namespace qoracle {

namespace {

constexpr Real kInvSqrt2 = 0.70710678118654752440;

const std::array<GateInfo, 15> kGateTable = {{
    {"id", 1, 0, "id", false},
    {"x", 1, 0, "x", false},
    {"y", 1, 0, "y", false},
    {"z", 1, 0, "z", false},
    {"h", 1, 0, "h", false},
    {"s", 1, 0, "sdg", false},
    {"sdg", 1, 0, "s", false},
    {"t", 1, 0, "tdg", false},
    {"tdg", 1, 0, "t", false},
    {"rx", 1, 1, "rx", true},
    {"ry", 1, 1, "ry", true},
    {"rz", 1, 1, "rz", true},
    {"cx", 2, 0, "cx", false},
    {"cz", 2, 0, "cz", false},
    {"swap", 2, 0, "swap", false},
}};

CMatrix matrix_1q(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

Real unitarity_defect(const CMatrix& entries) {
  const CMatrix product = entries.adjoint() * entries;
  const CMatrix identity =
      CMatrix::Identity(entries.rows(), entries.cols());
  return (product - identity).cwiseAbs().maxCoeff();
}

GateMatrix validated_unitary(const CMatrix& entries) {
  if (entries.rows() != entries.cols() ||
      (entries.rows() != 2 && entries.rows() != 4)) {
    throw StructuralError("gate matrix must be 2x2 or 4x4, got " +
                          std::to_string(entries.rows()) + "x" +
                          std::to_string(entries.cols()));
  }
  if (!entries.allFinite()) {
    throw StructuralError("gate matrix has non-finite entries");
  }
  const Real defect = unitarity_defect(entries);
  if (defect > kEpsilonUnitary) {
    throw StructuralError("gate matrix is not unitary, defect " +
                          std::to_string(defect));
  }
  return GateMatrix{entries.rows() == 2 ? 1 : 2, entries};
}

std::span<const GateInfo> standard_gates() {
  return {kGateTable.data(), kGateTable.size()};
}

const GateInfo* find_gate(std::string_view name) {
  for (const GateInfo& info : kGateTable) {
    if (name == info.name) return &info;
  }
  return nullptr;
}

GateMatrix gate_matrix(std::string_view name, std::span<const Real> params) {
  const GateInfo* info = find_gate(name);
  if (info == nullptr) {
    throw StructuralError("unknown gate '" + std::string(name) + "'");
  }
  if (static_cast<int>(params.size()) != info->param_count) {
    throw StructuralError("gate '" + std::string(name) + "' takes " +
                          std::to_string(info->param_count) +
                          " parameter(s), got " +
                          std::to_string(params.size()));
  }

  const Complex i(0.0, 1.0);
  if (name == "id") return {1, matrix_1q(1, 0, 0, 1)};
  if (name == "x") return {1, matrix_1q(0, 1, 1, 0)};
  if (name == "y") return {1, matrix_1q(0, -i, i, 0)};
  if (name == "z") return {1, matrix_1q(1, 0, 0, -1)};
  if (name == "h") {
    return {1, matrix_1q(kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2)};
  }
  if (name == "s") return {1, matrix_1q(1, 0, 0, i)};
  if (name == "sdg") return {1, matrix_1q(1, 0, 0, -i)};
  if (name == "t") return {1, matrix_1q(1, 0, 0, std::polar(1.0, M_PI / 4))};
  if (name == "tdg") {
    return {1, matrix_1q(1, 0, 0, std::polar(1.0, -M_PI / 4))};
  }
  if (name == "rx") {
    const Real half = params[0] / 2;
    return {1, matrix_1q(std::cos(half), -i * std::sin(half),
                         -i * std::sin(half), std::cos(half))};
  }
  if (name == "ry") {
    const Real half = params[0] / 2;
    return {1, matrix_1q(std::cos(half), -std::sin(half), std::sin(half),
                         std::cos(half))};
  }
  if (name == "rz") {
    const Real half = params[0] / 2;
    return {1, matrix_1q(std::polar(1.0, -half), 0, 0, std::polar(1.0, half))};
  }

  CMatrix m = CMatrix::Zero(4, 4);
  if (name == "cx") {
    // Control is the high bit of the local index.
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
  } else if (name == "cz") {
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 2) = 1;
    m(3, 3) = -1;
  } else {  // swap
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
  }
  return {2, m};
}

}  // namespace qoracle
