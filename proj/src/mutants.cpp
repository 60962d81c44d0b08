#include "qoracle/mutants.hpp"

#include <algorithm>
#include <cstdlib>

namespace qoracle {

namespace {

// Shared plumbing: every mutant wraps the correct step and warps its
// output.
class MutantBackend : public Backend {
 protected:
  StateVector correct_step(const StateVector& state,
                           const GateInstruction& instruction) const {
    return apply_gate(state, instruction_matrix(instruction),
                      instruction.targets);
  }
};

class NormSkipBackend final : public MutantBackend {
 public:
  std::string id() const override { return kNormSkip; }
  std::unique_ptr<Backend> fork() const override {
    return std::make_unique<NormSkipBackend>();
  }
  StateVector step(const StateVector& state,
                   const GateInstruction& instruction) override {
    StateVector out = correct_step(state, instruction);
    out.amplitudes *= 1.02;
    return out;
  }
};

class GateTypoBackend final : public MutantBackend {
 public:
  explicit GateTypoBackend(std::string gate) : gate_(std::move(gate)) {}
  std::string id() const override { return kGateTypo; }
  std::unique_ptr<Backend> fork() const override {
    return std::make_unique<GateTypoBackend>(gate_);
  }
  StateVector step(const StateVector& state,
                   const GateInstruction& instruction) override {
    if (instruction.gate_name != gate_) {
      return correct_step(state, instruction);
    }
    const CMatrix typo = corrupted_matrix(instruction.gate_name,
                                          instruction.params);
    const GateMatrix gate{typo.rows() == 2 ? 1 : 2, typo};
    return apply_gate(state, gate, instruction.targets);
  }

 private:
  std::string gate_;
};

class OffByOneBackend final : public MutantBackend {
 public:
  std::string id() const override { return kOffByOne; }
  std::unique_ptr<Backend> fork() const override {
    return std::make_unique<OffByOneBackend>();
  }
  StateVector step(const StateVector& state,
                   const GateInstruction& instruction) override {
    GateInstruction shifted = instruction;
    if (!shifted.targets.empty() && state.num_qubits > 0) {
      int& last = shifted.targets.back();
      last = (last + 1) % state.num_qubits;
    }
    return correct_step(state, shifted);
  }
};

class WidthLeakBackend final : public MutantBackend {
 public:
  explicit WidthLeakBackend(int leak_after) : leak_after_(leak_after) {}
  std::string id() const override { return kWidthLeak; }
  std::unique_ptr<Backend> fork() const override {
    return std::make_unique<WidthLeakBackend>(leak_after_);
  }
  StateVector step(const StateVector& state,
                   const GateInstruction& instruction) override {
    StateVector out = correct_step(state, instruction);
    if (steps_taken_++ == leak_after_ && out.num_qubits >= 1) {
      // Project the top qubit onto |0> and truncate.
      StateVector narrowed;
      narrowed.num_qubits = out.num_qubits - 1;
      const Eigen::Index half = out.amplitudes.size() / 2;
      narrowed.amplitudes = out.amplitudes.head(half);
      const Real norm = narrowed.amplitudes.norm();
      if (norm > 1e-150) {
        narrowed.amplitudes /= norm;
      } else {
        narrowed = make_zero_state(narrowed.num_qubits);
      }
      return narrowed;
    }
    return out;
  }

 private:
  int leak_after_;
  int steps_taken_ = 0;
};

class MergeFaultBackend final : public MutantBackend {
 public:
  std::string id() const override { return kMergeFault; }
  std::unique_ptr<Backend> fork() const override {
    return std::make_unique<MergeFaultBackend>();
  }
  StateVector step(const StateVector& state,
                   const GateInstruction& instruction) override {
    StateVector out = correct_step(state, instruction);
    for (Eigen::Index i = 1; i < out.amplitudes.size(); i += 2) {
      out.amplitudes[i] = Complex(0, 0);
    }
    const Real norm = out.amplitudes.norm();
    if (norm > 1e-150) {
      out.amplitudes /= norm;
    } else {
      // Everything lived on odd basis states; collapse to |0...0>.
      out = make_zero_state(out.num_qubits);
    }
    return out;
  }
};

class PhaseDropBackend final : public MutantBackend {
 public:
  std::string id() const override { return kPhaseDrop; }
  std::unique_ptr<Backend> fork() const override {
    return std::make_unique<PhaseDropBackend>();
  }
  StateVector step(const StateVector& state,
                   const GateInstruction& instruction) override {
    StateVector out = correct_step(state, instruction);
    for (Eigen::Index i = 0; i < out.amplitudes.size(); ++i) {
      out.amplitudes[i] = Complex(out.amplitudes[i].real(), 0);
    }
    return out;
  }
};

int parse_index_param(const MutantSpec& spec, const std::string& key) {
  const auto it = spec.parameters.find(key);
  if (it == spec.parameters.end()) {
    throw StructuralError("mutant '" + spec.mutant_id + "' needs parameter '" +
                          key + "'");
  }
  char* end = nullptr;
  const long value = std::strtol(it->second.c_str(), &end, 10);
  if (end == nullptr || *end != '\0' || value < 0) {
    throw StructuralError("mutant parameter '" + key +
                          "' must be a non-negative integer, got '" +
                          it->second + "'");
  }
  return static_cast<int>(value);
}

}  // namespace

std::vector<MutantSpec> mutant_catalog() {
  return {
      {kNormSkip, {},
       "rescales the state by 1.02 after every step, breaking normalization"},
      {kGateTypo, {{"gate", "h"}},
       "applies a corrupted matrix for one gate of the standard set"},
      {kOffByOne, {},
       "applies each gate with its last target shifted by one, mod width"},
      {kWidthLeak, {{"k", "0"}},
       "drops the highest qubit after instruction k by projecting and "
       "truncating"},
      {kMergeFault, {},
       "zeroes all odd basis amplitudes after each step and renormalizes, "
       "making execution many-to-one"},
      {kPhaseDrop, {},
       "discards the imaginary part of every amplitude after each step"},
  };
}

MutantSpec resolve_mutant(const std::string& mutant_id,
                          const std::map<std::string, std::string>& parameters) {
  for (MutantSpec spec : mutant_catalog()) {
    if (spec.mutant_id != mutant_id) continue;
    for (const auto& [key, value] : parameters) {
      if (spec.parameters.find(key) == spec.parameters.end()) {
        throw StructuralError("mutant '" + mutant_id +
                              "' has no parameter '" + key + "'");
      }
      spec.parameters[key] = value;
    }
    if (mutant_id == kGateTypo) {
      const std::string& gate = spec.parameters.at("gate");
      if (find_gate(gate) == nullptr) {
        throw StructuralError("gate_typo parameter 'gate' names unknown gate '" +
                              gate + "'");
      }
    }
    if (mutant_id == kWidthLeak) {
      parse_index_param(spec, "k");
    }
    return spec;
  }
  throw StructuralError("unknown mutant '" + mutant_id + "'");
}

std::vector<OracleId> expected_oracles(const std::string& mutant_id) {
  if (mutant_id == kNormSkip) return {OracleId::kProbability};
  if (mutant_id == kGateTypo) {
    return {OracleId::kReversibility, OracleId::kProbability};
  }
  if (mutant_id == kOffByOne) return {OracleId::kReversibility};
  if (mutant_id == kWidthLeak) return {OracleId::kWidth};
  if (mutant_id == kMergeFault) {
    return {OracleId::kEntropy, OracleId::kReversibility};
  }
  if (mutant_id == kPhaseDrop) {
    return {OracleId::kReversibility, OracleId::kProbability};
  }
  throw StructuralError("unknown mutant '" + mutant_id + "'");
}

std::unique_ptr<Backend> make_mutant(const MutantSpec& raw_spec, Rng& rng) {
  (void)rng;  // the catalog faults are deterministic
  const MutantSpec spec = resolve_mutant(raw_spec.mutant_id,
                                         raw_spec.parameters);
  if (spec.mutant_id == kNormSkip) {
    return std::make_unique<NormSkipBackend>();
  }
  if (spec.mutant_id == kGateTypo) {
    return std::make_unique<GateTypoBackend>(spec.parameters.at("gate"));
  }
  if (spec.mutant_id == kOffByOne) {
    return std::make_unique<OffByOneBackend>();
  }
  if (spec.mutant_id == kWidthLeak) {
    return std::make_unique<WidthLeakBackend>(parse_index_param(spec, "k"));
  }
  if (spec.mutant_id == kMergeFault) {
    return std::make_unique<MergeFaultBackend>();
  }
  return std::make_unique<PhaseDropBackend>();
}

bool trial_non_degenerate(const MutantSpec& raw_spec, const Circuit& circuit) {
  const MutantSpec spec = resolve_mutant(raw_spec.mutant_id,
                                         raw_spec.parameters);
  if (spec.mutant_id == kNormSkip || spec.mutant_id == kMergeFault ||
      spec.mutant_id == kPhaseDrop) {
    return !circuit.instructions.empty();
  }
  if (spec.mutant_id == kGateTypo) {
    const std::string& gate = spec.parameters.at("gate");
    return std::any_of(circuit.instructions.begin(),
                       circuit.instructions.end(),
                       [&](const GateInstruction& instr) {
                         return instr.gate_name == gate;
                       });
  }
  if (spec.mutant_id == kWidthLeak) {
    return static_cast<int>(circuit.instructions.size()) >
           parse_index_param(spec, "k");
  }
  // off_by_one: shifting every last target uniformly is a self-consistent
  // relabeling that no implicit oracle can distinguish from a correct run;
  // the fault only shows when a shifted target collides with the other
  // target of its own instruction.
  for (const GateInstruction& instr : circuit.instructions) {
    if (instr.targets.size() < 2) continue;
    const int shifted =
        (instr.targets.back() + 1) % std::max(circuit.num_qubits, 1);
    if (shifted == instr.targets.front()) return true;
  }
  return false;
}

CMatrix corrupted_matrix(std::string_view gate_name,
                         std::span<const Real> params) {
  CMatrix m = gate_matrix(gate_name, params).entries;
  if (gate_name == "h") {
    // Every transposition of h's entries stays unitary, so the typo here
    // drops the sign instead.
    m(1, 1) = m(0, 1);
  } else {
    std::swap(m(0, 0), m(0, 1));
  }
  return m;
}

}  // namespace qoracle
