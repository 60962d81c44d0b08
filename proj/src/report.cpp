#include "qoracle/report.hpp"

#include <fstream>

namespace qoracle {

nlohmann::json to_json(const OracleVerdict& verdict) {
  nlohmann::json j;
  j["oracle_id"] = to_string(verdict.oracle_id);
  j["passed"] = verdict.passed;
  j["measured"] = verdict.measured;
  j["location"] = verdict.location;
  j["message"] = verdict.message;
  return j;
}

nlohmann::json to_json(const CampaignResult& result) {
  nlohmann::json j;
  j["trials_run"] = result.trials_run;

  nlohmann::json violations = nlohmann::json::array();
  for (const Violation& violation : result.violations) {
    nlohmann::json v;
    v["trial"] = violation.trial;
    v["seed"] = violation.trial_seed;
    v["backend_id"] = violation.backend_id;
    v["circuit_qasm"] = violation.circuit_qasm;
    v["verdict"] = to_json(violation.verdict);
    violations.push_back(std::move(v));
  }
  j["violations"] = std::move(violations);

  nlohmann::json matrix = nlohmann::json::object();
  for (const auto& [key, count] : result.detection_matrix) {
    matrix[key.first][to_string(key.second)] = count;
  }
  j["detection_matrix"] = std::move(matrix);
  j["non_degenerate_trials"] = result.non_degenerate_trials;
  j["expected_oracle_detections"] = result.expected_oracle_detections;
  return j;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json j;
  j["schema_version"] = report.schema_version;
  j["invocation"] = report.invocation;
  nlohmann::json verdicts = nlohmann::json::array();
  for (const OracleVerdict& verdict : report.verdicts) {
    verdicts.push_back(to_json(verdict));
  }
  j["verdicts"] = std::move(verdicts);
  j["campaign"] = report.campaign.has_value() ? to_json(*report.campaign)
                                              : nlohmann::json(nullptr);
  j["exit_status"] = report.exit_status;
  return j;
}

void write_report(const Report& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw StructuralError("cannot write report to '" + path + "'");
  }
  out << to_json(report).dump(2) << "\n";
}

}  // namespace qoracle
