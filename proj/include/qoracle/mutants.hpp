#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qoracle/backend.hpp"
#include "qoracle/rng.hpp"
#include "qoracle/verdict.hpp"

namespace qoracle {

// One deliberately faulty backend variant. parameters is a small
// string-to-string map; each mutant documents its own keys.
struct MutantSpec {
  std::string mutant_id;
  std::map<std::string, std::string> parameters;
  std::string description;
};

inline constexpr const char* kNormSkip = "norm_skip";
inline constexpr const char* kGateTypo = "gate_typo";
inline constexpr const char* kOffByOne = "off_by_one";
inline constexpr const char* kWidthLeak = "width_leak";
inline constexpr const char* kMergeFault = "merge_fault";
inline constexpr const char* kPhaseDrop = "phase_drop";

// The six catalog entries with default parameters:
//   norm_skip    rescale the state by 1.02 after every step
//   gate_typo    corrupt one gate's matrix (parameter "gate", default h)
//   off_by_one   shift each instruction's last target by one, mod width
//   width_leak   drop the top qubit after instruction k (parameter "k")
//   merge_fault  zero all odd basis amplitudes after each step, renormalize
//   phase_drop   discard every imaginary part after each step
std::vector<MutantSpec> mutant_catalog();

// Catalog entry with defaults filled in. Throws StructuralError for ids
// outside the catalog or malformed parameters.
MutantSpec resolve_mutant(const std::string& mutant_id,
                          const std::map<std::string, std::string>& parameters = {});

// Oracles this fault is built to trip.
std::vector<OracleId> expected_oracles(const std::string& mutant_id);

std::unique_ptr<Backend> make_mutant(const MutantSpec& spec, Rng& rng);

// Whether a trial on this circuit can observe the fault at all: the
// faulty code path must actually run (empty circuits, circuits without
// the corrupted gate, and relabelings that stay self-consistent are
// excluded from detection-rate denominators).
bool trial_non_degenerate(const MutantSpec& spec, const Circuit& circuit);

// The typo matrix used by gate_typo: the first two entries swapped, or
// for h (where every entry transposition happens to stay unitary) the
// sign dropped from the last entry. Non-unitary for every parameterless
// gate in the set.
CMatrix corrupted_matrix(std::string_view gate_name,
                         std::span<const Real> params);

}  // namespace qoracle
