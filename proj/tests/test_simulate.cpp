#include <doctest.h>

#include "qoracle/generate.hpp"
#include "qoracle/simulate.hpp"
#include "test_backends.hpp"

using namespace qoracle;

namespace {

constexpr Real kInvSqrt2 = 0.70710678118654752440;

Circuit single_h() {
  Circuit c;
  c.num_qubits = 1;
  c.instructions.push_back({"h", {}, {0}});
  return c;
}

StateVector plus_state() {
  StateVector s{1, CVector(2)};
  s.amplitudes << Complex(kInvSqrt2, 0), Complex(kInvSqrt2, 0);
  return s;
}

ExecutionTrace trace_of(const ProbabilityDistribution& dist) {
  ExecutionTrace trace;
  trace.final_distribution = dist;
  return trace;
}

}  // namespace

TEST_CASE("run_forward records the expected states") {
  CorrectBackend backend;
  const ExecutionTrace trace =
      run_forward(single_h(), make_zero_state(1), backend, true);
  REQUIRE(trace.states.size() == 2);
  CHECK(trace.final_state.amplitudes[0].real() == doctest::Approx(kInvSqrt2));
  CHECK(trace.final_state.amplitudes[1].real() == doctest::Approx(kInvSqrt2));
  CHECK(trace.backend_id == "correct");
}

TEST_CASE("empty circuit leaves the input untouched") {
  CorrectBackend backend;
  Circuit empty;
  empty.num_qubits = 2;
  const StateVector input = make_basis_state(2, 2);  // qubit 1 set
  const ExecutionTrace trace = run_forward(empty, input, backend, true);
  CHECK(trace.states.size() == 1);
  CHECK(trace.final_state.amplitudes == input.amplitudes);
  CHECK(trace.final_distribution[2] == doctest::Approx(1.0));
}

TEST_CASE("bell circuit from |00>") {
  CorrectBackend backend;
  Circuit bell;
  bell.num_qubits = 2;
  bell.instructions.push_back({"h", {}, {0}});
  bell.instructions.push_back({"cx", {}, {0, 1}});
  const ExecutionTrace trace =
      run_forward(bell, make_zero_state(2), backend, false);
  CHECK(trace.states.size() == 2);  // untraced keeps initial and final only
  CHECK(trace.final_state.amplitudes[0].real() == doctest::Approx(kInvSqrt2));
  CHECK(trace.final_state.amplitudes[3].real() == doctest::Approx(kInvSqrt2));
}

TEST_CASE("errors carry the instruction index") {
  CorrectBackend backend;
  Circuit c;
  c.num_qubits = 2;
  c.instructions.push_back({"h", {}, {0}});
  c.instructions.push_back({"h", {}, {5}});
  try {
    run_forward(c, make_zero_state(2), backend, false);
    FAIL("expected a width violation");
  } catch (const WidthViolationError& e) {
    REQUIRE(e.instruction_index.has_value());
    CHECK(*e.instruction_index == 1);
  }

  CHECK_THROWS_AS(run_forward(c, make_zero_state(1), backend, false),
                  StructuralError);
}

TEST_CASE("round trip on the correct backend recovers the input") {
  CorrectBackend backend;
  const RoundTripResult result =
      run_roundtrip(single_h(), plus_state(), backend);
  CHECK(result.output.amplitudes[0].real() == doctest::Approx(1.0));
  CHECK(std::abs(result.output.amplitudes[1]) < 1e-12);
  CHECK(result.fidelity == doctest::Approx(1.0));

  GeneratorConfig config;
  config.min_qubits = 1;
  config.max_qubits = 6;
  config.min_depth = 0;
  config.max_depth = 40;
  Rng rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const Circuit circuit = generate_circuit(config, rng);
    const StateVector input = random_state(circuit.num_qubits, rng);
    CorrectBackend fresh;
    CHECK(run_roundtrip(circuit, input, fresh).fidelity >= 1.0 - 1e-9);
  }
}

// The projector replaces h with a non-unitary collapse, so running the
// circuit and its inverse keeps only the |0> component of |+>.
TEST_CASE("round trip through the projector keeps half the state") {
  qoracle::testing::ProjectorBackend backend;
  const RoundTripResult result =
      run_roundtrip(single_h(), plus_state(), backend);
  CHECK(result.fidelity == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(fidelity(plus_state(), result.recovered) < 0.75);
}

TEST_CASE("sampling a deterministic distribution") {
  ProbabilityDistribution dist(2);
  dist << 1.0, 0.0;
  const auto histogram = sample_measurements(trace_of(dist), 100, 7);
  REQUIRE(histogram.size() == 1);
  CHECK(histogram.at(0) == 100);
}

TEST_CASE("sampling a fair coin stays within the binomial envelope") {
  ProbabilityDistribution dist(2);
  dist << 0.5, 0.5;
  // 10000 shots at p=0.5: six sigma is 300 counts.
  const auto histogram = sample_measurements(trace_of(dist), 10000, 99);
  const std::uint64_t zeros =
      histogram.count(0) > 0 ? histogram.at(0) : 0;
  CHECK(zeros >= 4700);
  CHECK(zeros <= 5300);

  const auto repeat = sample_measurements(trace_of(dist), 10000, 99);
  CHECK(repeat == histogram);
}

TEST_CASE("sampling refuses an invalid distribution") {
  ProbabilityDistribution dist(2);
  dist << 0.64, 0.64;
  CHECK_THROWS_AS(sample_measurements(trace_of(dist), 10, 1),
                  DistributionInvalidError);

  ProbabilityDistribution negative(2);
  negative << 1.5, -0.5;
  CHECK_THROWS_AS(sample_measurements(trace_of(negative), 10, 1),
                  DistributionInvalidError);
}

TEST_CASE("identical runs produce identical traces") {
  GeneratorConfig config;
  Rng rng(5150);
  const Circuit circuit = generate_circuit(config, rng);
  const StateVector input = random_state(circuit.num_qubits, rng);
  CorrectBackend a;
  CorrectBackend b;
  const ExecutionTrace ta = run_forward(circuit, input, a, true);
  const ExecutionTrace tb = run_forward(circuit, input, b, true);
  REQUIRE(ta.states.size() == tb.states.size());
  for (std::size_t i = 0; i < ta.states.size(); ++i) {
    CHECK(ta.states[i].amplitudes == tb.states[i].amplitudes);
  }
  CHECK(ta.final_distribution == tb.final_distribution);
}
