#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "qoracle/circuit.hpp"
#include "qoracle/mutants.hpp"
#include "qoracle/verdict.hpp"

namespace qoracle {

// Sidecar metadata that makes a saved failure rerunnable: the circuit is
// stored next to it as <id>.qasm.
struct FailureRecord {
  std::string id;
  std::uint64_t seed = 0;
  int trial = 0;
  MutantSpec mutant;
  OracleId oracle_id = OracleId::kProbability;
  std::map<std::string, Real> measured;
  std::string message;
};

std::filesystem::path corpus_subdir(const std::filesystem::path& root);
std::filesystem::path failures_subdir(const std::filesystem::path& root);

void save_corpus_circuit(const std::filesystem::path& root,
                         const std::string& name, const Circuit& circuit);

void save_failure(const std::filesystem::path& root, const FailureRecord& record,
                  const Circuit& circuit);

// Throws StructuralError when the id is unknown.
FailureRecord load_failure(const std::filesystem::path& root,
                           const std::string& id, Circuit* circuit);

std::vector<std::string> list_failures(const std::filesystem::path& root);

}  // namespace qoracle
