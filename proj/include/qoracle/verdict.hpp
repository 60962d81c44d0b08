#pragma once

#include <map>
#include <string>
#include <string_view>

#include "qoracle/types.hpp"

namespace qoracle {

enum class OracleId {
  kProbability,
  kWidth,
  kReversibility,
  kEntropy,
};

std::string to_string(OracleId id);

// Throws StructuralError on unknown names. Accepts the lowercase spelling
// used on the command line.
OracleId oracle_id_from_string(std::string_view name);

// Outcome of one oracle check. A failing verdict always carries the
// out-of-tolerance quantity in measured, named in message.
struct OracleVerdict {
  OracleId oracle_id = OracleId::kProbability;
  bool passed = true;
  std::map<std::string, Real> measured;
  std::string location;  // instruction index, "final", or "ensemble"
  std::string message;
};

}  // namespace qoracle
