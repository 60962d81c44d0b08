#include <doctest.h>

#include <cmath>

#include "qoracle/rng.hpp"
#include "qoracle/state.hpp"

using namespace qoracle;

namespace {

constexpr Real kInvSqrt2 = 0.70710678118654752440;

StateVector two_amp_state(Complex a0, Complex a1) {
  StateVector s{1, CVector(2)};
  s.amplitudes << a0, a1;
  return s;
}

StateVector random_gate_target_state(Rng& rng, int num_qubits,
                                     GateMatrix* gate_out,
                                     std::vector<int>* targets_out) {
  const GateInfo* picked = nullptr;
  do {
    picked = &standard_gates()[rng.below(standard_gates().size())];
  } while (picked->arity > num_qubits);
  const GateInfo& info = *picked;
  std::vector<Real> params(info.param_count);
  for (Real& p : params) p = rng.uniform(0.0, 2 * M_PI);
  *gate_out = gate_matrix(info.name, params);
  targets_out->clear();
  while (static_cast<int>(targets_out->size()) < info.arity) {
    const int t = rng.range(0, num_qubits - 1);
    if (std::find(targets_out->begin(), targets_out->end(), t) ==
        targets_out->end()) {
      targets_out->push_back(t);
    }
  }
  return random_state(num_qubits, rng);
}

}  // namespace

TEST_CASE("hadamard on |0> gives the even superposition") {
  const StateVector out =
      apply_gate(make_zero_state(1), gate_matrix("h", {}), std::array{0});
  CHECK(out.amplitudes[0].real() == doctest::Approx(kInvSqrt2));
  CHECK(out.amplitudes[1].real() == doctest::Approx(kInvSqrt2));
}

TEST_CASE("x flips |0> to |1>") {
  const StateVector out =
      apply_gate(make_zero_state(1), gate_matrix("x", {}), std::array{0});
  CHECK(std::abs(out.amplitudes[0]) == doctest::Approx(0.0));
  CHECK(out.amplitudes[1].real() == doctest::Approx(1.0));
}

TEST_CASE("cx completes the bell pair") {
  StateVector plus{2, CVector::Zero(4)};
  plus.amplitudes[0] = kInvSqrt2;
  plus.amplitudes[1] = kInvSqrt2;  // qubit 0 set
  const StateVector bell =
      apply_gate(plus, gate_matrix("cx", {}), std::array{0, 1});
  CHECK(bell.amplitudes[0].real() == doctest::Approx(kInvSqrt2));
  CHECK(std::abs(bell.amplitudes[1]) == doctest::Approx(0.0));
  CHECK(std::abs(bell.amplitudes[2]) == doctest::Approx(0.0));
  CHECK(bell.amplitudes[3].real() == doctest::Approx(kInvSqrt2));
}

TEST_CASE("apply_gate rejects bad targets") {
  const StateVector s = make_zero_state(2);
  CHECK_THROWS_AS(apply_gate(s, gate_matrix("h", {}), std::array{2}),
                  WidthViolationError);
  CHECK_THROWS_AS(apply_gate(s, gate_matrix("h", {}), std::array{-1}),
                  WidthViolationError);
  CHECK_THROWS_AS(apply_gate(s, gate_matrix("cx", {}), std::array{1, 1}),
                  StructuralError);
  CHECK_THROWS_AS(apply_gate(s, gate_matrix("cx", {}), std::array{0}),
                  StructuralError);
}

// Expands the gate to the full Hilbert-space operator column by column
// and multiplies, independently of the strided kernel in apply_gate.
static CVector full_operator_apply(const CVector& amplitudes,
                                   const GateMatrix& gate,
                                   const std::vector<int>& targets) {
  const Eigen::Index dim = amplitudes.size();
  CMatrix full = CMatrix::Zero(dim, dim);
  const int arity = gate.arity;
  for (Eigen::Index column = 0; column < dim; ++column) {
    int local = 0;
    for (int t = 0; t < arity; ++t) {
      local = (local << 1) |
              static_cast<int>((column >> targets[t]) & 1);
    }
    for (int local_out = 0; local_out < (1 << arity); ++local_out) {
      Eigen::Index row = column;
      for (int t = 0; t < arity; ++t) {
        const Eigen::Index bit = Eigen::Index{1} << targets[t];
        const int value = (local_out >> (arity - 1 - t)) & 1;
        row = value ? (row | bit) : (row & ~bit);
      }
      full(row, column) += gate.entries(local_out, local);
    }
  }
  return full * amplitudes;
}

TEST_CASE("apply_gate matches the full-operator expansion") {
  Rng rng(0xfade);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.range(1, 6);
    GateMatrix gate;
    std::vector<int> targets;
    const StateVector in = random_gate_target_state(rng, n, &gate, &targets);
    const CVector expected =
        full_operator_apply(in.amplitudes, gate, targets);
    const StateVector actual = apply_gate(in, gate, targets);
    CHECK((actual.amplitudes - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("apply_gate preserves the norm on random inputs") {
  Rng rng(0xbadc0ffee);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.range(1, 10);
    GateMatrix gate;
    std::vector<int> targets;
    const StateVector in = random_gate_target_state(rng, n, &gate, &targets);
    const StateVector out = apply_gate(in, gate, targets);
    CHECK(std::abs(norm_squared(out) - norm_squared(in)) < 1e-10);
  }
}

TEST_CASE("unitaries preserve inner products") {
  Rng rng(0x5eed);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = rng.range(1, 6);
    GateMatrix gate;
    std::vector<int> targets;
    const StateVector a = random_gate_target_state(rng, n, &gate, &targets);
    const StateVector b = random_state(n, rng);
    const Real before = fidelity(a, b);
    const Real after =
        fidelity(apply_gate(a, gate, targets), apply_gate(b, gate, targets));
    CHECK(std::abs(after - before) < 1e-10);
  }
}

TEST_CASE("measurement_distribution squares the moduli") {
  const ProbabilityDistribution even =
      measurement_distribution(two_amp_state(kInvSqrt2, kInvSqrt2));
  CHECK(even[0] == doctest::Approx(0.5));
  CHECK(even[1] == doctest::Approx(0.5));

  const ProbabilityDistribution basis =
      measurement_distribution(two_amp_state(0, 1));
  CHECK(basis[0] == doctest::Approx(0.0));
  CHECK(basis[1] == doctest::Approx(1.0));

  // A tampered state passes straight through; judging it is the oracle's
  // job, not this function's.
  const ProbabilityDistribution tampered =
      measurement_distribution(two_amp_state(0.8, 0.8));
  CHECK(tampered[0] == doctest::Approx(0.64));
  CHECK(tampered[1] == doctest::Approx(0.64));
  CHECK(tampered.sum() == doctest::Approx(1.28));
}

TEST_CASE("fidelity matches the textbook cases") {
  Rng rng(77);
  const StateVector s = random_state(3, rng);
  CHECK(fidelity(s, s) == doctest::Approx(1.0));

  CHECK(fidelity(make_basis_state(1, 0), make_basis_state(1, 1)) ==
        doctest::Approx(0.0));

  const StateVector plus = two_amp_state(kInvSqrt2, kInvSqrt2);
  CHECK(fidelity(make_basis_state(1, 0), plus) == doctest::Approx(0.5));

  CHECK_THROWS_AS(fidelity(make_zero_state(1), make_zero_state(2)),
                  StructuralError);
}

TEST_CASE("fingerprint ignores global phase") {
  Rng rng(123);
  const Real grid = 1e-6;
  for (int trial = 0; trial < 50; ++trial) {
    const StateVector v = random_state(rng.range(1, 5), rng);
    const Fingerprint base = canonical_fingerprint(v, grid);
    for (Real theta : {0.1, 1.0, 2.5, M_PI, 5.9}) {
      StateVector rotated = v;
      rotated.amplitudes *= std::polar(1.0, theta);
      CHECK(canonical_fingerprint(rotated, grid) == base);
    }
  }
}

TEST_CASE("fingerprint separates orthogonal basis states") {
  const Real grid = 1e-6;
  CHECK(canonical_fingerprint(make_basis_state(1, 0), grid) !=
        canonical_fingerprint(make_basis_state(1, 1), grid));
}

TEST_CASE("fingerprint absorbs perturbations well under the grid") {
  // Mid-cell states with a large anchor: quantize a random state to the
  // grid, then nudge every component by far less than half a cell.
  Rng rng(0xf00d);
  const Real grid = 1e-6;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.range(1, 5);
    StateVector v = random_state(n, rng);
    v.amplitudes[0] = Complex(0.5, 0.0);
    v.amplitudes.normalize();
    const Complex anchor = v.amplitudes[0];
    v.amplitudes *= std::conj(anchor) / std::abs(anchor);

    StateVector snapped = v;
    for (Eigen::Index i = 0; i < snapped.amplitudes.size(); ++i) {
      const Complex a = snapped.amplitudes[i];
      snapped.amplitudes[i] =
          Complex(std::round(a.real() / grid) * grid,
                  std::round(a.imag() / grid) * grid);
    }

    const Eigen::Index dim = snapped.amplitudes.size();
    const Real per_component =
        grid / (16.0 * std::sqrt(2.0 * static_cast<Real>(dim)));
    StateVector nudged = snapped;
    Real delta_norm_sq = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
      const Real dre = rng.uniform(-per_component, per_component);
      const Real dim_part = rng.uniform(-per_component, per_component);
      nudged.amplitudes[i] += Complex(dre, dim_part);
      delta_norm_sq += dre * dre + dim_part * dim_part;
    }
    REQUIRE(std::sqrt(delta_norm_sq) < grid / 4);

    CHECK(canonical_fingerprint(snapped, grid) ==
          canonical_fingerprint(nudged, grid));
  }
}

TEST_CASE("fingerprint rejects the zero state") {
  StateVector zero{1, CVector::Zero(2)};
  CHECK_THROWS_AS(canonical_fingerprint(zero, 1e-6), StructuralError);
}

TEST_CASE("basis state construction checks its range") {
  CHECK_THROWS_AS(make_basis_state(1, 2), StructuralError);
  CHECK_THROWS_AS(make_basis_state(17, 0), StructuralError);
  CHECK(make_basis_state(0, 0).amplitudes.size() == 1);
}
