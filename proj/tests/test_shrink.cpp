#include <doctest.h>

#include "qoracle/generate.hpp"
#include "qoracle/mutants.hpp"
#include "qoracle/oracles.hpp"
#include "qoracle/shrink.hpp"

using namespace qoracle;

namespace {

const ToleranceConfig kTol{};

FailingPredicate contains_gate(const char* name) {
  return [name](const Circuit& c) {
    for (const GateInstruction& instr : c.instructions) {
      if (instr.gate_name == name) return true;
    }
    return false;
  };
}

}  // namespace

TEST_CASE("shrink isolates the single triggering instruction") {
  Circuit c;
  c.num_qubits = 2;
  for (int i = 0; i < 6; ++i) c.instructions.push_back({"h", {}, {i % 2}});
  c.instructions.push_back({"t", {}, {0}});
  for (int i = 0; i < 5; ++i) c.instructions.push_back({"x", {}, {1}});

  const Circuit minimal = shrink(c, contains_gate("t"));
  REQUIRE(minimal.instructions.size() == 1);
  CHECK(minimal.instructions[0].gate_name == "t");
  CHECK(is_one_minimal(minimal, contains_gate("t")));
}

TEST_CASE("an always-failing predicate shrinks to the empty circuit") {
  Circuit c;
  c.num_qubits = 1;
  for (int i = 0; i < 4; ++i) c.instructions.push_back({"x", {}, {0}});
  const Circuit minimal = shrink(c, [](const Circuit&) { return true; });
  CHECK(minimal.instructions.empty());
  CHECK(is_one_minimal(minimal, [](const Circuit&) { return true; }));
}

TEST_CASE("shrink rejects a predicate that does not fail") {
  Circuit c;
  c.num_qubits = 1;
  CHECK_THROWS_AS(shrink(c, [](const Circuit&) { return false; }),
                  StructuralError);
}

TEST_CASE("angles simplify toward zero when the failure persists") {
  Circuit c;
  c.num_qubits = 1;
  c.instructions.push_back({"rx", {0.777}, {0}});
  const Circuit minimal = shrink(c, contains_gate("rx"));
  REQUIRE(minimal.instructions.size() == 1);
  CHECK(minimal.instructions[0].params[0] == doctest::Approx(0.0));
}

TEST_CASE("shrinking is deterministic") {
  GeneratorConfig config;
  config.seed = 5;
  Rng rng(5);
  const Circuit c = generate_circuit(config, rng);
  const auto predicate = [](const Circuit& circuit) {
    return !circuit.instructions.empty();
  };
  const Circuit a = shrink(c, predicate);
  const Circuit b = shrink(c, predicate);
  CHECK(structurally_equal(a, b, 0.0));
  CHECK(a.instructions.size() == 1);
}

TEST_CASE("merge_fault failures stay failures through shrinking") {
  GeneratorConfig config;
  config.min_qubits = 2;
  config.max_qubits = 4;
  config.min_depth = 5;
  config.max_depth = 50;
  Rng rng(31);

  const MutantSpec spec = resolve_mutant(kMergeFault);
  const auto still_failing = [&](const Circuit& candidate) {
    Rng mutant_rng(7);
    auto backend = make_mutant(spec, mutant_rng);
    Rng probe_rng(99);
    std::vector<StateVector> probes;
    for (int i = 0; i < 4; ++i) {
      probes.push_back(random_state(candidate.num_qubits, probe_rng));
    }
    return !check_reversibility(candidate, probes, *backend, kTol, {}).passed;
  };

  int shrunk_cases = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const Circuit circuit = generate_circuit(config, rng);
    if (!still_failing(circuit)) continue;
    const Circuit minimal = shrink(circuit, still_failing);
    ++shrunk_cases;
    CHECK(still_failing(minimal));
    CHECK(minimal.instructions.size() <= circuit.instructions.size());
    CHECK(is_one_minimal(minimal, still_failing));
  }
  CHECK(shrunk_cases >= 8);
}
