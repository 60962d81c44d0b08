#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <vector>

#include "qoracle/ensemble.hpp"
#include "qoracle/generate.hpp"
#include "qoracle/mutants.hpp"
#include "qoracle/oracles.hpp"

namespace qoracle {

inline const std::set<OracleId> kAllOracles = {
    OracleId::kProbability, OracleId::kWidth, OracleId::kReversibility,
    OracleId::kEntropy};

struct CampaignOptions {
  std::set<OracleId> oracles_enabled = kAllOracles;
  int reversibility_probes = 8;
  Granularity granularity = Granularity::kWhole;
  int fragment_count = 5;
  // When set, failing cases are persisted as corpus/<...>.qasm and
  // failures/<id>.qasm plus failures/<id>.json under this directory.
  std::optional<std::filesystem::path> corpus_dir;
  int max_saved_failures = 100;
};

struct Violation {
  int trial = 0;
  std::uint64_t trial_seed = 0;
  std::string backend_id;
  std::string circuit_qasm;
  OracleVerdict verdict;
};

struct CampaignResult {
  int trials_run = 0;
  std::vector<Violation> violations;
  // (mutant, oracle) -> number of trials where that oracle flagged it.
  std::map<std::pair<std::string, OracleId>, int> detection_matrix;
  // Trials where the mutant's faulty path was actually exercised.
  std::map<std::string, int> non_degenerate_trials;
  // Trials flagged by at least one of the mutant's expected oracles.
  std::map<std::string, int> expected_oracle_detections;
  double wall_time_seconds = 0.0;

  // No violations on the correct backend.
  bool sound() const;
};

// Runs every enabled oracle once against one backend: probability and
// width share one traced forward run per ensemble member, reversibility
// round-trips the probe states, entropy runs the ensemble. Execution
// errors surface as failing verdicts, not exceptions.
std::vector<OracleVerdict> run_all_oracles(
    const Circuit& circuit, const Ensemble& ensemble,
    std::span<const StateVector> probes, const Backend& backend,
    const ToleranceConfig& tol, const std::set<OracleId>& enabled,
    const ReversibilityOptions& rev_options);

// trials independently seeded rounds of generate (or mutate a previous
// corpus circuit), then all enabled oracles against the correct backend
// and every listed mutant. Per-trial errors are recorded, never fatal.
// Deterministic for a fixed (config, mutants, trials, tolerances).
CampaignResult run_campaign(const GeneratorConfig& config,
                            const std::vector<MutantSpec>& mutants,
                            int trials, const ToleranceConfig& tol,
                            const CampaignOptions& options = {});

}  // namespace qoracle
