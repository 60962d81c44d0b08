#include "qoracle/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace qoracle {

ParseError::ParseError(int line, int column, const std::string& message,
                       bool width_violation)
    : std::runtime_error("line " + std::to_string(line) + ", col " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      width_violation_(width_violation) {}

namespace {

enum class TokenKind { kIdent, kNumber, kString, kSymbol, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_space_and_comments();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = TokenKind::kEnd;
      current_.text.clear();
      return;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ident.push_back(text_[pos_]);
        bump();
      }
      current_.kind = TokenKind::kIdent;
      current_.text = std::move(ident);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string num;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
              ((text_[pos_] == '+' || text_[pos_] == '-') && !num.empty() &&
               (num.back() == 'e' || num.back() == 'E')))) {
        num.push_back(text_[pos_]);
        bump();
      }
      current_.kind = TokenKind::kNumber;
      current_.text = std::move(num);
      return;
    }
    if (c == '"') {
      bump();
      std::string body;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        body.push_back(text_[pos_]);
        bump();
      }
      if (pos_ >= text_.size()) {
        throw ParseError(current_.line, current_.column,
                         "unterminated string literal");
      }
      bump();  // closing quote
      current_.kind = TokenKind::kString;
      current_.text = std::move(body);
      return;
    }
    current_.kind = TokenKind::kSymbol;
    current_.text = std::string(1, c);
    bump();
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : scanner_(text) {}

  Circuit parse() {
    parse_header();
    while (scanner_.peek().kind != TokenKind::kEnd) {
      parse_statement();
    }
    if (!saw_qreg_) {
      throw ParseError(1, 1, "no qreg declaration found");
    }
    return std::move(circuit_);
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& message,
                         bool width = false) {
    throw ParseError(at.line, at.column, message, width);
  }

  Token expect_symbol(const std::string& sym) {
    Token t = scanner_.take();
    if (t.kind != TokenKind::kSymbol || t.text != sym) {
      fail(t, "expected '" + sym + "'");
    }
    return t;
  }

  void parse_header() {
    const Token& t = scanner_.peek();
    if (t.kind == TokenKind::kIdent && t.text == "OPENQASM") {
      scanner_.take();
      Token version = scanner_.take();
      if (version.kind != TokenKind::kNumber || version.text != "2.0") {
        fail(version, "only OPENQASM 2.0 is supported");
      }
      expect_symbol(";");
    }
  }

  void parse_statement() {
    Token head = scanner_.take();
    if (head.kind != TokenKind::kIdent) {
      fail(head, "expected a statement");
    }
    if (head.text == "include") {
      Token file = scanner_.take();
      if (file.kind != TokenKind::kString || file.text != "qelib1.inc") {
        fail(file, "only include \"qelib1.inc\" is supported");
      }
      expect_symbol(";");
      return;
    }
    if (head.text == "qreg") {
      parse_qreg(head);
      return;
    }
    if (head.text == "creg" || head.text == "measure" ||
        head.text == "barrier" || head.text == "reset" ||
        head.text == "gate" || head.text == "if" || head.text == "opaque") {
      fail(head, "'" + head.text + "' is not supported in this subset");
    }
    parse_gate_statement(head);
  }

  void parse_qreg(const Token& head) {
    if (saw_qreg_) {
      fail(head, "multiple quantum registers are not supported");
    }
    Token name = scanner_.take();
    if (name.kind != TokenKind::kIdent) {
      fail(name, "expected register name");
    }
    expect_symbol("[");
    Token size = scanner_.take();
    if (size.kind != TokenKind::kNumber) {
      fail(size, "expected register size");
    }
    char* end = nullptr;
    const long n = std::strtol(size.text.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || n < 1) {
      fail(size, "register size must be a positive integer");
    }
    if (n > kMaxQubits) {
      fail(size, "register size " + std::to_string(n) + " exceeds the " +
                     std::to_string(kMaxQubits) + " qubit limit");
    }
    expect_symbol("]");
    expect_symbol(";");
    register_name_ = name.text;
    circuit_.num_qubits = static_cast<int>(n);
    saw_qreg_ = true;
  }

  void parse_gate_statement(const Token& head) {
    if (!saw_qreg_) {
      fail(head, "gate statement before qreg declaration");
    }
    const GateInfo* info = find_gate(head.text);
    if (info == nullptr) {
      fail(head, "unknown gate '" + head.text + "'");
    }

    GateInstruction instr;
    instr.gate_name = head.text;

    if (scanner_.peek().kind == TokenKind::kSymbol &&
        scanner_.peek().text == "(") {
      scanner_.take();
      instr.params.push_back(parse_angle());
      while (scanner_.peek().kind == TokenKind::kSymbol &&
             scanner_.peek().text == ",") {
        scanner_.take();
        instr.params.push_back(parse_angle());
      }
      expect_symbol(")");
    }
    if (static_cast<int>(instr.params.size()) != info->param_count) {
      fail(head, "gate '" + head.text + "' takes " +
                     std::to_string(info->param_count) + " parameter(s), got " +
                     std::to_string(instr.params.size()));
    }

    instr.targets.push_back(parse_target());
    while (scanner_.peek().kind == TokenKind::kSymbol &&
           scanner_.peek().text == ",") {
      scanner_.take();
      instr.targets.push_back(parse_target());
    }
    expect_symbol(";");

    if (static_cast<int>(instr.targets.size()) != info->arity) {
      fail(head, "gate '" + head.text + "' takes " +
                     std::to_string(info->arity) + " target(s), got " +
                     std::to_string(instr.targets.size()));
    }
    for (std::size_t a = 0; a < instr.targets.size(); ++a) {
      for (std::size_t b = a + 1; b < instr.targets.size(); ++b) {
        if (instr.targets[a] == instr.targets[b]) {
          fail(head, "duplicate target qubit " +
                         std::to_string(instr.targets[a]));
        }
      }
    }
    circuit_.instructions.push_back(std::move(instr));
  }

  int parse_target() {
    Token name = scanner_.take();
    if (name.kind != TokenKind::kIdent) {
      fail(name, "expected register reference");
    }
    if (name.text != register_name_) {
      fail(name, "unknown register '" + name.text + "'");
    }
    expect_symbol("[");
    Token index = scanner_.take();
    if (index.kind != TokenKind::kNumber) {
      fail(index, "expected qubit index");
    }
    char* end = nullptr;
    const long idx = std::strtol(index.text.c_str(), &end, 10);
    if (end == nullptr || *end != '\0' || idx < 0) {
      fail(index, "qubit index must be a non-negative integer");
    }
    if (idx >= circuit_.num_qubits) {
      fail(index,
           "static width violation: qubit index " + std::to_string(idx) +
               " out of range for register of size " +
               std::to_string(circuit_.num_qubits),
           /*width=*/true);
    }
    expect_symbol("]");
    return static_cast<int>(idx);
  }

  // angle := ['-'] factor { ('*' | '/') factor },  factor := number | pi
  Real parse_angle() {
    bool negate = false;
    while (scanner_.peek().kind == TokenKind::kSymbol &&
           scanner_.peek().text == "-") {
      scanner_.take();
      negate = !negate;
    }
    Real value = parse_angle_factor();
    while (scanner_.peek().kind == TokenKind::kSymbol &&
           (scanner_.peek().text == "*" || scanner_.peek().text == "/")) {
      Token op = scanner_.take();
      const Real rhs = parse_angle_factor();
      if (op.text == "*") {
        value *= rhs;
      } else {
        if (rhs == 0.0) fail(op, "division by zero in angle");
        value /= rhs;
      }
    }
    return negate ? -value : value;
  }

  Real parse_angle_factor() {
    Token t = scanner_.take();
    if (t.kind == TokenKind::kIdent && t.text == "pi") {
      return M_PI;
    }
    if (t.kind == TokenKind::kNumber) {
      char* end = nullptr;
      const Real v = std::strtod(t.text.c_str(), &end);
      if (end == nullptr || *end != '\0') {
        fail(t, "malformed number '" + t.text + "'");
      }
      return v;
    }
    fail(t, "expected a number or pi");
  }

  Scanner scanner_;
  Circuit circuit_;
  std::string register_name_;
  bool saw_qreg_ = false;
};

std::string format_angle(Real value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

Circuit parse_qasm(const std::string& text) {
  return Parser(text).parse();
}

std::string emit_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.num_qubits << "];\n";
  for (const GateInstruction& instr : circuit.instructions) {
    out << instr.gate_name;
    if (!instr.params.empty()) {
      out << "(";
      for (std::size_t i = 0; i < instr.params.size(); ++i) {
        if (i > 0) out << ",";
        out << format_angle(instr.params[i]);
      }
      out << ")";
    }
    out << " ";
    for (std::size_t i = 0; i < instr.targets.size(); ++i) {
      if (i > 0) out << ",";
      out << "q[" << instr.targets[i] << "]";
    }
    out << ";\n";
  }
  return out.str();
}

}  // namespace qoracle
