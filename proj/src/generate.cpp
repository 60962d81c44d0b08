#include "qoracle/generate.hpp"

#include <algorithm>
#include <cmath>

namespace qoracle {

namespace {

// Gates the generator draws from; sdg/tdg only appear through inversion.
const char* const kGeneratedGates[] = {"id", "x",  "y",  "z",  "h",
                                       "s",  "t",  "rx", "ry", "rz",
                                       "cx", "cz", "swap"};

std::map<std::string, Real> effective_weights(const GeneratorConfig& config) {
  if (!config.gate_weights.empty()) return config.gate_weights;
  std::map<std::string, Real> weights;
  for (const char* name : kGeneratedGates) weights[name] = 1.0;
  return weights;
}

Real draw_angle(const GeneratorConfig& config, Rng& rng) {
  if (config.angle_distribution == AngleDistribution::kUniform) {
    return rng.uniform(0.0, 2.0 * M_PI);
  }
  return static_cast<Real>(rng.range(0, 7)) * (M_PI / 4.0);
}

std::vector<int> draw_targets(int arity, int num_qubits, Rng& rng) {
  std::vector<int> targets;
  targets.reserve(arity);
  while (static_cast<int>(targets.size()) < arity) {
    const int candidate = rng.range(0, num_qubits - 1);
    if (std::find(targets.begin(), targets.end(), candidate) ==
        targets.end()) {
      targets.push_back(candidate);
    }
  }
  return targets;
}

GateInstruction draw_instruction(const GeneratorConfig& config,
                                 int num_qubits, Rng& rng) {
  const std::map<std::string, Real> weights = effective_weights(config);

  // Cumulative pick in fixed registry order, restricted to arities that
  // fit the register.
  std::vector<std::pair<const GateInfo*, Real>> table;
  Real total = 0.0;
  for (const GateInfo& info : standard_gates()) {
    const auto it = weights.find(info.name);
    if (it == weights.end() || it->second <= 0.0) continue;
    if (info.arity > num_qubits) continue;
    total += it->second;
    table.emplace_back(&info, total);
  }
  if (table.empty()) {
    throw StructuralError("no gate fits a register of width " +
                          std::to_string(num_qubits));
  }

  const Real pick = rng.uniform() * total;
  const GateInfo* chosen = table.back().first;
  for (const auto& [info, cumulative] : table) {
    if (pick < cumulative) {
      chosen = info;
      break;
    }
  }

  GateInstruction instr;
  instr.gate_name = chosen->name;
  for (int p = 0; p < chosen->param_count; ++p) {
    instr.params.push_back(draw_angle(config, rng));
  }
  instr.targets = draw_targets(chosen->arity, num_qubits, rng);
  return instr;
}

}  // namespace

void validate_config(const GeneratorConfig& config) {
  if (config.min_qubits < 1 || config.min_qubits > config.max_qubits ||
      config.max_qubits > kMaxQubits) {
    throw StructuralError("qubit bounds must satisfy 1 <= min <= max <= " +
                          std::to_string(kMaxQubits));
  }
  if (config.min_depth < 0 || config.min_depth > config.max_depth) {
    throw StructuralError("depth bounds must satisfy 0 <= min <= max");
  }
  bool any_positive = false;
  for (const auto& [name, weight] : config.gate_weights) {
    if (find_gate(name) == nullptr) {
      throw StructuralError("gate weight names unknown gate '" + name + "'");
    }
    if (weight < 0.0 || !std::isfinite(weight)) {
      throw StructuralError("gate weight for '" + name +
                            "' must be finite and non-negative");
    }
    any_positive = any_positive || weight > 0.0;
  }
  if (!config.gate_weights.empty() && !any_positive) {
    throw StructuralError("at least one gate weight must be positive");
  }
}

Circuit generate_circuit(const GeneratorConfig& config, Rng& rng) {
  validate_config(config);
  Circuit circuit;
  circuit.num_qubits = rng.range(config.min_qubits, config.max_qubits);
  const int depth = rng.range(config.min_depth, config.max_depth);
  circuit.instructions.reserve(depth);
  for (int i = 0; i < depth; ++i) {
    circuit.instructions.push_back(
        draw_instruction(config, circuit.num_qubits, rng));
  }
  return circuit;
}

Circuit mutate_circuit(const Circuit& circuit, Rng& rng) {
  enum Edit { kInsert, kDelete, kSwap, kPerturbAngle, kRetarget };
  Circuit mutated = circuit;
  GeneratorConfig insert_config;
  insert_config.min_qubits = insert_config.max_qubits =
      std::max(circuit.num_qubits, 1);

  Edit edit = static_cast<Edit>(rng.range(0, 4));
  const bool empty = mutated.instructions.empty();
  if (edit == kPerturbAngle) {
    const bool has_params =
        std::any_of(mutated.instructions.begin(), mutated.instructions.end(),
                    [](const GateInstruction& g) { return !g.params.empty(); });
    if (!has_params) edit = kInsert;
  }
  if ((edit == kDelete || edit == kSwap || edit == kRetarget) && empty) {
    edit = kInsert;
  }

  switch (edit) {
    case kInsert: {
      const std::size_t at = rng.below(mutated.instructions.size() + 1);
      mutated.instructions.insert(
          mutated.instructions.begin() + static_cast<std::ptrdiff_t>(at),
          draw_instruction(insert_config, mutated.num_qubits, rng));
      break;
    }
    case kDelete: {
      const std::size_t at = rng.below(mutated.instructions.size());
      mutated.instructions.erase(mutated.instructions.begin() +
                                 static_cast<std::ptrdiff_t>(at));
      break;
    }
    case kSwap: {
      const std::size_t a = rng.below(mutated.instructions.size());
      const std::size_t b = rng.below(mutated.instructions.size());
      std::swap(mutated.instructions[a], mutated.instructions[b]);
      break;
    }
    case kPerturbAngle: {
      std::vector<std::size_t> with_params;
      for (std::size_t i = 0; i < mutated.instructions.size(); ++i) {
        if (!mutated.instructions[i].params.empty()) with_params.push_back(i);
      }
      GateInstruction& instr =
          mutated.instructions[with_params[rng.below(with_params.size())]];
      Real& angle = instr.params[rng.below(instr.params.size())];
      angle += rng.uniform(-0.1, 0.1);
      break;
    }
    case kRetarget: {
      const std::size_t at = rng.below(mutated.instructions.size());
      GateInstruction& instr = mutated.instructions[at];
      instr.targets = draw_targets(static_cast<int>(instr.targets.size()),
                                   mutated.num_qubits, rng);
      break;
    }
  }
  return mutated;
}

}  // namespace qoracle
