#include <doctest.h>

#include <cmath>

#include "qoracle/generate.hpp"
#include "qoracle/qasm.hpp"

using namespace qoracle;

TEST_CASE("generation is deterministic in the seed") {
  GeneratorConfig config;
  Rng a(1234);
  Rng b(1234);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(structurally_equal(generate_circuit(config, a),
                             generate_circuit(config, b), 0.0));
  }
}

TEST_CASE("max_depth zero yields an empty circuit of the drawn width") {
  GeneratorConfig config;
  config.min_depth = 0;
  config.max_depth = 0;
  Rng rng(5);
  const Circuit c = generate_circuit(config, rng);
  CHECK(c.instructions.empty());
  CHECK(c.num_qubits >= config.min_qubits);
  CHECK(c.num_qubits <= config.max_qubits);
}

TEST_CASE("generated circuits always satisfy the static invariants") {
  GeneratorConfig config;
  config.min_qubits = 1;
  config.max_qubits = 8;
  config.min_depth = 0;
  config.max_depth = 40;
  Rng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    config.angle_distribution = trial % 2 == 0
                                    ? AngleDistribution::kPiQuarter
                                    : AngleDistribution::kUniform;
    const Circuit c = generate_circuit(config, rng);
    CHECK_NOTHROW(validate_circuit(c));
    CHECK(static_cast<int>(c.instructions.size()) <= config.max_depth);
    CHECK(c.num_qubits <= config.max_qubits);
  }
}

TEST_CASE("gate weights restrict the drawn set") {
  GeneratorConfig config;
  config.gate_weights = {{"x", 1.0}, {"h", 0.0}};
  config.min_depth = config.max_depth = 30;
  Rng rng(7);
  const Circuit c = generate_circuit(config, rng);
  for (const GateInstruction& instr : c.instructions) {
    CHECK(instr.gate_name == "x");
  }
}

TEST_CASE("quarter-pi angles stay on the lattice") {
  GeneratorConfig config;
  config.gate_weights = {{"rz", 1.0}};
  config.min_depth = config.max_depth = 50;
  Rng rng(8);
  const Circuit c = generate_circuit(config, rng);
  for (const GateInstruction& instr : c.instructions) {
    const Real steps = instr.params[0] / (M_PI / 4);
    CHECK(std::abs(steps - std::round(steps)) < 1e-12);
  }
}

TEST_CASE("config validation catches the broken cases") {
  GeneratorConfig config;
  config.min_qubits = 0;
  CHECK_THROWS_AS(validate_config(config), StructuralError);
  config = {};
  config.max_qubits = 17;
  CHECK_THROWS_AS(validate_config(config), StructuralError);
  config = {};
  config.min_depth = 5;
  config.max_depth = 2;
  CHECK_THROWS_AS(validate_config(config), StructuralError);
  config = {};
  config.gate_weights = {{"hh", 1.0}};
  CHECK_THROWS_AS(validate_config(config), StructuralError);
  config = {};
  config.gate_weights = {{"h", 0.0}};
  CHECK_THROWS_AS(validate_config(config), StructuralError);
  config = {};
  config.gate_weights = {{"h", -1.0}};
  CHECK_THROWS_AS(validate_config(config), StructuralError);
}

TEST_CASE("mutation never changes the width and keeps circuits valid") {
  GeneratorConfig config;
  config.min_qubits = 1;
  config.max_qubits = 6;
  config.min_depth = 0;
  config.max_depth = 20;
  Rng rng(1001);
  for (int trial = 0; trial < 1000; ++trial) {
    const Circuit base = generate_circuit(config, rng);
    const Circuit mutated = mutate_circuit(base, rng);
    CHECK(mutated.num_qubits == base.num_qubits);
    CHECK_NOTHROW(validate_circuit(mutated));
    CHECK(structurally_equal(parse_qasm(emit_qasm(mutated)), mutated));
  }
}

TEST_CASE("mutating the empty circuit falls back to insertion") {
  Circuit empty;
  empty.num_qubits = 2;
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Circuit mutated = mutate_circuit(empty, rng);
    CHECK(mutated.instructions.size() == 1);
  }
}

TEST_CASE("a delete mutation can empty a one-gate circuit") {
  Circuit one;
  one.num_qubits = 1;
  one.instructions.push_back({"h", {}, {0}});
  Rng rng(3);
  bool saw_empty = false;
  for (int trial = 0; trial < 200 && !saw_empty; ++trial) {
    saw_empty = mutate_circuit(one, rng).instructions.empty();
  }
  CHECK(saw_empty);
}
