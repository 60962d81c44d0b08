#include "qoracle/verdict.hpp"

namespace qoracle {

std::string to_string(OracleId id) {
  switch (id) {
    case OracleId::kProbability:
      return "probability";
    case OracleId::kWidth:
      return "width";
    case OracleId::kReversibility:
      return "reversibility";
    case OracleId::kEntropy:
      return "entropy";
  }
  return "unknown";
}

OracleId oracle_id_from_string(std::string_view name) {
  if (name == "probability") return OracleId::kProbability;
  if (name == "width") return OracleId::kWidth;
  if (name == "reversibility") return OracleId::kReversibility;
  if (name == "entropy") return OracleId::kEntropy;
  throw StructuralError("unknown oracle '" + std::string(name) + "'");
}

}  // namespace qoracle
