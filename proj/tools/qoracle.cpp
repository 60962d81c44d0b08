#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "qoracle/campaign.hpp"
#include "qoracle/corpus.hpp"
#include "qoracle/qasm.hpp"
#include "qoracle/report.hpp"
#include "qoracle/shrink.hpp"

namespace {

using namespace qoracle;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct ToleranceFlags {
  double eps_prob = ToleranceConfig{}.epsilon_prob;
  double eps_sum = ToleranceConfig{}.epsilon_sum;
  double eps_fidelity = ToleranceConfig{}.epsilon_fidelity;
  double eps_entropy = ToleranceConfig{}.epsilon_entropy;
  double grid = ToleranceConfig{}.fingerprint_grid;

  void attach(CLI::App* cmd) {
    cmd->add_option("--eps-prob", eps_prob,
                    "slack for the probability range check");
    cmd->add_option("--eps-sum", eps_sum, "slack for |sum - 1|");
    cmd->add_option("--eps-fidelity", eps_fidelity,
                    "slack for round-trip fidelity");
    cmd->add_option("--eps-entropy", eps_entropy,
                    "slack for entropy conservation, in bits");
    cmd->add_option("--grid", grid, "state fingerprint rounding grid");
  }

  ToleranceConfig config() const {
    ToleranceConfig tol;
    tol.epsilon_prob = eps_prob;
    tol.epsilon_sum = eps_sum;
    tol.epsilon_fidelity = eps_fidelity;
    tol.epsilon_entropy = eps_entropy;
    tol.fingerprint_grid = grid;
    validate_tolerances(tol);
    return tol;
  }

  nlohmann::json to_json() const {
    return {{"eps_prob", eps_prob},
            {"eps_sum", eps_sum},
            {"eps_fidelity", eps_fidelity},
            {"eps_entropy", eps_entropy},
            {"grid", grid}};
  }
};

std::uint64_t pick_seed(const CLI::Option* seed_opt, std::uint64_t seed) {
  if (seed_opt->count() > 0) return seed;
  std::random_device device;
  const std::uint64_t chosen =
      (static_cast<std::uint64_t>(device()) << 32) ^ device();
  std::cout << "seed: " << chosen << " (chosen randomly; pass --seed "
            << chosen << " to reproduce)\n";
  return chosen;
}

Granularity granularity_from_string(const std::string& name) {
  if (name == "whole") return Granularity::kWhole;
  if (name == "per_gate") return Granularity::kPerGate;
  if (name == "fragments") return Granularity::kFragments;
  throw StructuralError("unknown granularity '" + name + "'");
}

std::set<OracleId> oracles_from_flags(const std::vector<std::string>& names) {
  if (names.empty()) return kAllOracles;
  std::set<OracleId> enabled;
  for (const std::string& name : names) {
    if (name == "all") return kAllOracles;
    enabled.insert(oracle_id_from_string(name));
  }
  return enabled;
}

std::string default_corpus_dir() {
  const char* env = std::getenv("QORACLE_CORPUS");
  return env != nullptr ? env : "";
}

void print_verdict_line(const OracleVerdict& verdict) {
  std::cout << (verdict.passed ? "PASS" : "FAIL") << " "
            << to_string(verdict.oracle_id) << " @" << verdict.location
            << ": " << verdict.message << "\n";
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  std::string file;
  std::vector<std::string> oracles;
  std::string granularity = "whole";
  int fragments = 5;
  int probes = 8;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
  std::string json_path;
  ToleranceFlags tol;
};

int run_check(const CheckArgs& args) {
  std::ifstream in(args.file, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << args.file << "'\n";
    return kExitUsage;
  }
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());

  Circuit circuit;
  try {
    circuit = parse_qasm(text);
  } catch (const ParseError& e) {
    std::cerr << "error: " << args.file << ": " << e.what() << "\n";
    return kExitUsage;
  }

  const ToleranceConfig tol = args.tol.config();
  const std::set<OracleId> enabled = oracles_from_flags(args.oracles);
  const std::uint64_t seed = pick_seed(args.seed_opt, args.seed);
  if (args.probes < 1) {
    std::cerr << "error: --probes must be at least 1\n";
    return kExitUsage;
  }

  Rng rng(seed);
  std::vector<StateVector> probes;
  probes.reserve(args.probes);
  for (int i = 0; i < args.probes; ++i) {
    probes.push_back(random_state(circuit.num_qubits, rng));
  }
  ReversibilityOptions rev;
  rev.granularity = granularity_from_string(args.granularity);
  rev.fragment_count = args.fragments;
  rev.fragment_seed = rng.next();

  CorrectBackend backend;
  const std::vector<OracleVerdict> verdicts =
      run_all_oracles(circuit, default_ensemble(circuit.num_qubits), probes,
                      backend, tol, enabled, rev);

  int failed = 0;
  for (const OracleVerdict& verdict : verdicts) {
    print_verdict_line(verdict);
    if (!verdict.passed) ++failed;
  }
  std::cout << verdicts.size() - failed << " passed, " << failed
            << " failed\n";

  Report report;
  report.invocation = {{"command", "check"},
                       {"file", args.file},
                       {"granularity", args.granularity},
                       {"fragments", args.fragments},
                       {"probes", args.probes},
                       {"seed", seed},
                       {"tolerances", args.tol.to_json()}};
  report.verdicts = verdicts;
  report.exit_status = failed > 0 ? kExitViolations : kExitOk;
  if (!args.json_path.empty()) {
    write_report(report, args.json_path);
  }
  return report.exit_status;
}

// ---------------------------------------------------------------------------
// fuzz

struct FuzzArgs {
  int trials = 100;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
  std::vector<std::string> mutants = {"all"};
  std::string typo_gate;
  int leak_at = -1;
  int min_qubits = GeneratorConfig{}.min_qubits;
  int max_qubits = GeneratorConfig{}.max_qubits;
  int min_depth = GeneratorConfig{}.min_depth;
  int max_depth = GeneratorConfig{}.max_depth;
  std::string angles = "pi4";
  std::string granularity = "whole";
  int probes = 8;
  std::string corpus = default_corpus_dir();
  std::string json_path;
  bool expect_detections = false;
  ToleranceFlags tol;
};

std::vector<MutantSpec> resolve_mutant_flags(const FuzzArgs& args) {
  std::vector<std::string> ids;
  for (const std::string& name : args.mutants) {
    if (name == "none") return {};
    if (name == "all") {
      ids.clear();
      for (const MutantSpec& spec : mutant_catalog()) {
        ids.push_back(spec.mutant_id);
      }
      break;
    }
    ids.push_back(name);
  }

  std::vector<MutantSpec> specs;
  for (const std::string& id : ids) {
    std::map<std::string, std::string> params;
    if (id == kGateTypo && !args.typo_gate.empty()) {
      params["gate"] = args.typo_gate;
    }
    if (id == kWidthLeak && args.leak_at >= 0) {
      params["k"] = std::to_string(args.leak_at);
    }
    specs.push_back(resolve_mutant(id, params));
  }
  return specs;
}

void print_detection_table(const CampaignResult& result,
                           const std::vector<MutantSpec>& mutants) {
  if (mutants.empty()) {
    std::cout << "detection matrix: empty (no mutants)\n";
    return;
  }
  std::cout << "detection matrix (trials flagged, by oracle):\n";
  std::cout << "  mutant        probability  width  reversibility  entropy"
            << "  expected/non-degenerate\n";
  for (const MutantSpec& spec : mutants) {
    auto count = [&](OracleId id) {
      const auto it = result.detection_matrix.find({spec.mutant_id, id});
      return it == result.detection_matrix.end() ? 0 : it->second;
    };
    auto lookup = [&](const std::map<std::string, int>& m) {
      const auto it = m.find(spec.mutant_id);
      return it == m.end() ? 0 : it->second;
    };
    std::printf("  %-13s %11d  %5d  %13d  %7d  %d/%d\n",
                spec.mutant_id.c_str(), count(OracleId::kProbability),
                count(OracleId::kWidth), count(OracleId::kReversibility),
                count(OracleId::kEntropy),
                lookup(result.expected_oracle_detections),
                lookup(result.non_degenerate_trials));
  }
}

int run_fuzz(const FuzzArgs& args) {
  if (args.trials < 1) {
    std::cerr << "error: --trials must be at least 1\n";
    return kExitUsage;
  }
  std::vector<MutantSpec> mutants;
  ToleranceConfig tol;
  GeneratorConfig config;
  try {
    mutants = resolve_mutant_flags(args);
    tol = args.tol.config();
    config.min_qubits = args.min_qubits;
    config.max_qubits = args.max_qubits;
    config.min_depth = args.min_depth;
    config.max_depth = args.max_depth;
    if (args.angles == "pi4") {
      config.angle_distribution = AngleDistribution::kPiQuarter;
    } else if (args.angles == "uniform") {
      config.angle_distribution = AngleDistribution::kUniform;
    } else {
      throw StructuralError("--angles must be pi4 or uniform");
    }
    validate_config(config);
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  config.seed = pick_seed(args.seed_opt, args.seed);

  CampaignOptions options;
  options.reversibility_probes = args.probes;
  options.granularity = granularity_from_string(args.granularity);
  if (!args.corpus.empty()) {
    options.corpus_dir = std::filesystem::path(args.corpus);
  }

  const CampaignResult result =
      run_campaign(config, mutants, args.trials, tol, options);

  int correct_violations = 0;
  for (const Violation& violation : result.violations) {
    if (violation.backend_id == "correct") ++correct_violations;
  }
  std::cout << "fuzz: " << result.trials_run << " trials, seed "
            << config.seed << ", " << mutants.size() << " mutant(s)\n";
  std::cout << "violations: correct=" << correct_violations
            << " mutant=" << result.violations.size() - correct_violations
            << "\n";
  print_detection_table(result, mutants);
  std::printf("wall time: %.2fs\n", result.wall_time_seconds);

  bool detections_ok = true;
  if (args.expect_detections) {
    for (const MutantSpec& spec : mutants) {
      const auto it = result.expected_oracle_detections.find(spec.mutant_id);
      if (it == result.expected_oracle_detections.end() || it->second == 0) {
        std::cout << "expected detection missing for " << spec.mutant_id
                  << "\n";
        detections_ok = false;
      }
    }
  }

  Report report;
  nlohmann::json mutant_ids = nlohmann::json::array();
  for (const MutantSpec& spec : mutants) {
    mutant_ids.push_back({{"mutant_id", spec.mutant_id},
                          {"parameters", spec.parameters}});
  }
  report.invocation = {
      {"command", "fuzz"},
      {"trials", args.trials},
      {"seed", config.seed},
      {"mutants", mutant_ids},
      {"generator",
       {{"min_qubits", config.min_qubits},
        {"max_qubits", config.max_qubits},
        {"min_depth", config.min_depth},
        {"max_depth", config.max_depth},
        {"angles", args.angles}}},
      {"probes", args.probes},
      {"granularity", args.granularity},
      {"corpus", args.corpus},
      {"expect_detections", args.expect_detections},
      {"tolerances", args.tol.to_json()}};
  report.campaign = result;
  report.exit_status = (correct_violations == 0 && detections_ok)
                           ? kExitOk
                           : kExitViolations;
  if (!args.json_path.empty()) {
    write_report(report, args.json_path);
  }
  return report.exit_status;
}

// ---------------------------------------------------------------------------
// shrink

struct ShrinkArgs {
  std::string failure_id;
  std::string corpus = default_corpus_dir();
  std::string json_path;
  ToleranceFlags tol;
};

int run_shrink(const ShrinkArgs& args) {
  if (args.corpus.empty()) {
    std::cerr << "error: no corpus directory (pass --corpus or set "
                 "QORACLE_CORPUS)\n";
    return kExitUsage;
  }
  const std::filesystem::path root(args.corpus);

  Circuit circuit;
  FailureRecord record;
  ToleranceConfig tol;
  try {
    record = load_failure(root, args.failure_id, &circuit);
    tol = args.tol.config();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  // Rebuild the failing predicate from the metadata: the recorded oracle
  // must flag the recorded mutant.
  std::vector<StateVector> probes;
  Rng probe_rng(mix_seed(record.seed, 0x70726f6265ULL));
  for (int i = 0; i < 8; ++i) {
    probes.push_back(random_state(circuit.num_qubits, probe_rng));
  }
  ReversibilityOptions rev;
  rev.fragment_seed = mix_seed(record.seed, 0x66726167ULL);
  const std::set<OracleId> enabled = {record.oracle_id};

  const auto still_failing = [&](const Circuit& candidate) {
    Rng rng(record.seed);
    auto backend = make_mutant(record.mutant, rng);
    const std::vector<OracleVerdict> verdicts = run_all_oracles(
        candidate, default_ensemble(candidate.num_qubits), probes, *backend,
        tol, enabled, rev);
    return std::any_of(verdicts.begin(), verdicts.end(),
                       [&](const OracleVerdict& v) {
                         return !v.passed && v.oracle_id == record.oracle_id;
                       });
  };

  if (!still_failing(circuit)) {
    std::cerr << "error: failure '" << args.failure_id
              << "' no longer reproduces (stale metadata)\n";
    return kExitUsage;
  }

  const std::size_t before = circuit.instructions.size();
  const Circuit minimal = shrink(circuit, still_failing);
  const std::size_t after = minimal.instructions.size();
  save_failure(root, record, minimal);

  std::cout << "shrunk " << args.failure_id << ": " << before << " -> "
            << after << " instruction(s)\n";

  Report report;
  report.invocation = {{"command", "shrink"},
                       {"id", args.failure_id},
                       {"corpus", args.corpus},
                       {"before_instructions", before},
                       {"after_instructions", after},
                       {"oracle_id", to_string(record.oracle_id)},
                       {"mutant_id", record.mutant.mutant_id}};
  report.exit_status = kExitOk;
  if (!args.json_path.empty()) {
    write_report(report, args.json_path);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// mutants

int run_mutants_list() {
  for (const MutantSpec& spec : mutant_catalog()) {
    std::cout << spec.mutant_id;
    if (!spec.parameters.empty()) {
      std::cout << " (";
      bool first = true;
      for (const auto& [key, value] : spec.parameters) {
        if (!first) std::cout << ", ";
        std::cout << key << "=" << value;
        first = false;
      }
      std::cout << ")";
    }
    std::cout << "\n    " << spec.description << "\n    expected oracles:";
    for (OracleId id : expected_oracles(spec.mutant_id)) {
      std::cout << " " << to_string(id);
    }
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"implicit-oracle checking and fuzzing for quantum circuit "
               "simulation"};
  app.require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "run the oracles against one circuit file");
  check_cmd->add_option("file", check_args.file, "OPENQASM 2.0 circuit")
      ->required();
  check_cmd->add_option("--oracle", check_args.oracles,
                        "oracle to run (repeatable; default all)");
  check_cmd->add_option("--granularity", check_args.granularity,
                        "reversibility granularity: whole, per_gate, "
                        "fragments");
  check_cmd->add_option("--fragments", check_args.fragments,
                        "fragment count for --granularity fragments");
  check_cmd->add_option("--probes", check_args.probes,
                        "random states per reversibility check");
  check_args.seed_opt =
      check_cmd->add_option("--seed", check_args.seed, "rng seed");
  check_cmd->add_option("--json", check_args.json_path,
                        "write the report to this path");
  check_args.tol.attach(check_cmd);

  FuzzArgs fuzz_args;
  CLI::App* fuzz_cmd = app.add_subcommand(
      "fuzz", "generate random circuits and hunt for oracle violations");
  fuzz_cmd->add_option("--trials", fuzz_args.trials, "number of trials");
  fuzz_args.seed_opt =
      fuzz_cmd->add_option("--seed", fuzz_args.seed, "rng seed");
  fuzz_cmd
      ->add_option("--mutants", fuzz_args.mutants,
                   "mutant ids, or all / none")
      ->delimiter(',');
  fuzz_cmd->add_option("--typo-gate", fuzz_args.typo_gate,
                       "gate corrupted by gate_typo");
  fuzz_cmd->add_option("--leak-at", fuzz_args.leak_at,
                       "instruction index where width_leak fires");
  fuzz_cmd->add_option("--min-qubits", fuzz_args.min_qubits, "");
  fuzz_cmd->add_option("--max-qubits", fuzz_args.max_qubits, "");
  fuzz_cmd->add_option("--min-depth", fuzz_args.min_depth, "");
  fuzz_cmd->add_option("--max-depth", fuzz_args.max_depth, "");
  fuzz_cmd->add_option("--angles", fuzz_args.angles,
                       "angle distribution: pi4 or uniform");
  fuzz_cmd->add_option("--granularity", fuzz_args.granularity,
                       "reversibility granularity");
  fuzz_cmd->add_option("--probes", fuzz_args.probes,
                       "random states per reversibility check");
  fuzz_cmd->add_option("--corpus", fuzz_args.corpus,
                       "corpus directory (default $QORACLE_CORPUS)");
  fuzz_cmd->add_option("--json", fuzz_args.json_path,
                       "write the report to this path");
  fuzz_cmd->add_flag("--expect-detections", fuzz_args.expect_detections,
                     "fail unless every mutant is detected");
  fuzz_args.tol.attach(fuzz_cmd);

  ShrinkArgs shrink_args;
  CLI::App* shrink_cmd = app.add_subcommand(
      "shrink", "minimize a saved failure while it keeps failing");
  shrink_cmd->add_option("id", shrink_args.failure_id, "failure id")
      ->required();
  shrink_cmd->add_option("--corpus", shrink_args.corpus,
                         "corpus directory (default $QORACLE_CORPUS)");
  shrink_cmd->add_option("--json", shrink_args.json_path,
                         "write the report to this path");
  shrink_args.tol.attach(shrink_cmd);

  CLI::App* mutants_cmd =
      app.add_subcommand("mutants", "inspect the mutant catalog");
  CLI::App* mutants_list_cmd =
      mutants_cmd->add_subcommand("list", "list the catalog");
  mutants_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return run_check(check_args);
    if (fuzz_cmd->parsed()) return run_fuzz(fuzz_args);
    if (shrink_cmd->parsed()) return run_shrink(shrink_args);
    if (mutants_cmd->parsed() && mutants_list_cmd->parsed()) {
      return run_mutants_list();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
