#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qoracle/campaign.hpp"
#include "qoracle/verdict.hpp"

namespace qoracle {

inline constexpr const char* kReportSchemaVersion = "1.0";

// Machine-readable run summary. Top-level JSON fields are exactly
// schema_version, invocation, verdicts, campaign, exit_status.
struct Report {
  std::string schema_version = kReportSchemaVersion;
  nlohmann::json invocation = nlohmann::json::object();
  std::vector<OracleVerdict> verdicts;
  std::optional<CampaignResult> campaign;
  int exit_status = 0;
};

nlohmann::json to_json(const OracleVerdict& verdict);

// Deliberately excludes wall_time_seconds so equal-seed runs serialize
// byte-identically.
nlohmann::json to_json(const CampaignResult& result);

nlohmann::json to_json(const Report& report);

void write_report(const Report& report, const std::string& path);

}  // namespace qoracle
