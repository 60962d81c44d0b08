#pragma once

#include <stdexcept>
#include <string>

#include "qoracle/circuit.hpp"

namespace qoracle {

// Rejection with source position. width_violation marks the static case
// of a register index beyond the declared width.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message,
             bool width_violation = false);

  int line() const { return line_; }
  int column() const { return column_; }
  bool width_violation() const { return width_violation_; }

 private:
  int line_;
  int column_;
  bool width_violation_;
};

// Parses the supported OPENQASM 2.0 subset: optional version header,
// optional qelib1 include, exactly one qreg, and gate statements over the
// standard set. Angles may be float literals, pi, and products/quotients
// of those with unary minus. Throws ParseError.
Circuit parse_qasm(const std::string& text);

// Inverse of parse_qasm up to structural equality. Angles are printed
// with 17 significant digits so doubles survive the round trip.
std::string emit_qasm(const Circuit& circuit);

}  // namespace qoracle
