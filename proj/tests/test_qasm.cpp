#include <doctest.h>

#include "qoracle/generate.hpp"
#include "qoracle/qasm.hpp"

using namespace qoracle;

TEST_CASE("parses the bell pair") {
  const Circuit c = parse_qasm(
      "OPENQASM 2.0; qreg q[2]; h q[0]; cx q[0],q[1];");
  CHECK(c.num_qubits == 2);
  REQUIRE(c.instructions.size() == 2);
  CHECK(c.instructions[0].gate_name == "h");
  CHECK(c.instructions[0].targets == std::vector<int>{0});
  CHECK(c.instructions[1].gate_name == "cx");
  CHECK(c.instructions[1].targets == std::vector<int>{0, 1});
}

TEST_CASE("accepts the include and comments") {
  const Circuit c = parse_qasm(
      "OPENQASM 2.0;\n"
      "include \"qelib1.inc\";\n"
      "// a comment\n"
      "qreg q[1];\n"
      "h q[0]; // trailing comment\n");
  CHECK(c.instructions.size() == 1);
}

TEST_CASE("evaluates angle expressions") {
  const Circuit c = parse_qasm("qreg q[1]; rz(pi/4) q[0];");
  REQUIRE(c.instructions.size() == 1);
  CHECK(c.instructions[0].params[0] == doctest::Approx(M_PI / 4));

  const Circuit neg = parse_qasm("qreg q[1]; rx(-pi/2) q[0];");
  CHECK(neg.instructions[0].params[0] == doctest::Approx(-M_PI / 2));

  const Circuit lit = parse_qasm("qreg q[1]; ry(0.125) q[0];");
  CHECK(lit.instructions[0].params[0] == doctest::Approx(0.125));

  const Circuit prod = parse_qasm("qreg q[1]; rz(3*pi/4) q[0];");
  CHECK(prod.instructions[0].params[0] == doctest::Approx(3 * M_PI / 4));
}

TEST_CASE("flags a static width violation with its position") {
  try {
    parse_qasm("qreg q[2];\nh q[5];");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.width_violation());
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
    CHECK(std::string(e.what()).find("width violation") != std::string::npos);
  }
}

TEST_CASE("rejects what the subset excludes") {
  CHECK_THROWS_AS(parse_qasm("qreg q[1]; qreg r[1]; h q[0];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[1]; creg c[1];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[1]; measure q[0];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[1]; bogus q[0];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("OPENQASM 3.0; qreg q[1];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("h q[0]; qreg q[1];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[0];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[17];"), ParseError);
  CHECK_THROWS_AS(parse_qasm(""), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[2]; cx q[0],q[0];"), ParseError);
  CHECK_THROWS_AS(parse_qasm("qreg q[1]; h q[0]"), ParseError);
}

TEST_CASE("emits a parseable header for the empty circuit") {
  Circuit empty;
  empty.num_qubits = 3;
  const std::string text = emit_qasm(empty);
  CHECK(text.find("qreg q[3];") != std::string::npos);
  const Circuit back = parse_qasm(text);
  CHECK(back.num_qubits == 3);
  CHECK(back.instructions.empty());
}

TEST_CASE("emit contains the expected statements") {
  Circuit c;
  c.num_qubits = 1;
  c.instructions.push_back({"h", {}, {0}});
  const std::string text = emit_qasm(c);
  CHECK(text.find("qreg q[1];") != std::string::npos);
  CHECK(text.find("h q[0];") != std::string::npos);
}

TEST_CASE("parse then emit is the identity on generated circuits") {
  GeneratorConfig config;
  config.min_qubits = 1;
  config.max_qubits = 6;
  config.min_depth = 0;
  config.max_depth = 25;
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    config.angle_distribution = trial % 2 == 0
                                    ? AngleDistribution::kPiQuarter
                                    : AngleDistribution::kUniform;
    const Circuit c = generate_circuit(config, rng);
    const Circuit back = parse_qasm(emit_qasm(c));
    CAPTURE(trial);
    CHECK(structurally_equal(back, c));
  }
}
