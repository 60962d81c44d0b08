#include "qoracle/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "qoracle/corpus.hpp"
#include "qoracle/qasm.hpp"

namespace qoracle {

namespace {

OracleId map_execution_error(const SimulationError& error,
                             const std::set<OracleId>& enabled) {
  const bool is_width =
      dynamic_cast<const WidthViolationError*>(&error) != nullptr;
  const std::vector<OracleId> priority =
      is_width ? std::vector<OracleId>{OracleId::kWidth,
                                       OracleId::kReversibility,
                                       OracleId::kProbability,
                                       OracleId::kEntropy}
               : std::vector<OracleId>{OracleId::kReversibility,
                                       OracleId::kProbability,
                                       OracleId::kWidth, OracleId::kEntropy};
  for (OracleId id : priority) {
    if (enabled.count(id) > 0) return id;
  }
  return OracleId::kProbability;
}

OracleVerdict error_verdict(OracleId id, const SimulationError& error) {
  OracleVerdict verdict;
  verdict.oracle_id = id;
  verdict.passed = false;
  verdict.measured["execution_error"] = 1.0;
  verdict.location = error.instruction_index.has_value()
                         ? std::to_string(*error.instruction_index)
                         : "final";
  verdict.message = std::string("execution_error=1: ") + error.what();
  return verdict;
}

std::string trial_name(int trial) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "t%05d", trial);
  return buf;
}

}  // namespace

bool CampaignResult::sound() const {
  return std::none_of(violations.begin(), violations.end(),
                      [](const Violation& v) {
                        return v.backend_id == "correct";
                      });
}

std::vector<OracleVerdict> run_all_oracles(
    const Circuit& circuit, const Ensemble& ensemble,
    std::span<const StateVector> probes, const Backend& backend,
    const ToleranceConfig& tol, const std::set<OracleId>& enabled,
    const ReversibilityOptions& rev_options) {
  std::vector<OracleVerdict> verdicts;
  const bool want_probability = enabled.count(OracleId::kProbability) > 0;
  const bool want_width = enabled.count(OracleId::kWidth) > 0;

  if (want_probability || want_width) {
    OracleVerdict probability;
    probability.oracle_id = OracleId::kProbability;
    OracleVerdict width;
    width.oracle_id = OracleId::kWidth;
    std::optional<OracleVerdict> aborted;
    int members_checked = 0;

    for (const EnsembleMember& member : ensemble.members) {
      auto runner = backend.fork();
      ExecutionTrace trace;
      try {
        trace = run_forward(circuit, member.input, *runner, true);
      } catch (const SimulationError& e) {
        aborted = error_verdict(map_execution_error(e, enabled), e);
        break;
      }
      ++members_checked;
      if (want_probability && probability.passed) {
        probability = check_probability(trace.final_distribution, tol);
      }
      if (want_width && width.passed) {
        width = check_width(trace);
      }
      if ((!want_probability || !probability.passed) &&
          (!want_width || !width.passed)) {
        break;  // both already have their failure
      }
    }
    if (members_checked > 0) {
      if (want_probability) verdicts.push_back(probability);
      if (want_width) verdicts.push_back(width);
    }
    if (aborted.has_value()) verdicts.push_back(*aborted);
  }

  if (enabled.count(OracleId::kReversibility) > 0 && !probes.empty()) {
    verdicts.push_back(
        check_reversibility(circuit, probes, backend, tol, rev_options));
  }
  if (enabled.count(OracleId::kEntropy) > 0) {
    verdicts.push_back(check_entropy(ensemble, circuit, backend, tol));
  }
  return verdicts;
}

CampaignResult run_campaign(const GeneratorConfig& config,
                            const std::vector<MutantSpec>& mutants,
                            int trials, const ToleranceConfig& tol,
                            const CampaignOptions& options) {
  if (trials < 1) {
    throw StructuralError("campaign needs at least one trial");
  }
  validate_config(config);
  validate_tolerances(tol);
  std::vector<MutantSpec> resolved;
  resolved.reserve(mutants.size());
  for (const MutantSpec& spec : mutants) {
    resolved.push_back(resolve_mutant(spec.mutant_id, spec.parameters));
  }

  const auto started = std::chrono::steady_clock::now();
  CampaignResult result;
  std::vector<Circuit> corpus;
  int saved_failures = 0;

  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = mix_seed(config.seed,
                                              static_cast<std::uint64_t>(trial));
    Rng rng(trial_seed);

    Circuit circuit;
    if (!corpus.empty() && rng.uniform() < 0.5) {
      circuit = mutate_circuit(corpus[rng.below(corpus.size())], rng);
    } else {
      circuit = generate_circuit(config, rng);
    }
    corpus.push_back(circuit);
    if (corpus.size() > 256) corpus.erase(corpus.begin());

    const Ensemble ensemble = default_ensemble(circuit.num_qubits);
    std::vector<StateVector> probes;
    probes.reserve(options.reversibility_probes);
    for (int p = 0; p < options.reversibility_probes; ++p) {
      probes.push_back(random_state(circuit.num_qubits, rng));
    }
    ReversibilityOptions rev;
    rev.granularity = options.granularity;
    rev.fragment_count = options.fragment_count;
    rev.fragment_seed = rng.next();

    const std::string circuit_qasm = emit_qasm(circuit);
    bool circuit_saved = false;

    auto record = [&](const std::string& backend_id,
                      const std::vector<OracleVerdict>& verdicts,
                      const MutantSpec* mutant) {
      std::set<OracleId> failed;
      const OracleVerdict* first_failure = nullptr;
      for (const OracleVerdict& verdict : verdicts) {
        if (verdict.passed) continue;
        failed.insert(verdict.oracle_id);
        if (first_failure == nullptr) first_failure = &verdict;
        result.violations.push_back(
            {trial, trial_seed, backend_id, circuit_qasm, verdict});
      }
      if (mutant == nullptr || failed.empty()) return;

      for (OracleId oracle : failed) {
        ++result.detection_matrix[{mutant->mutant_id, oracle}];
      }
      const std::vector<OracleId> expected =
          expected_oracles(mutant->mutant_id);
      const OracleVerdict* expected_failure = nullptr;
      for (const OracleVerdict& verdict : verdicts) {
        if (!verdict.passed &&
            std::find(expected.begin(), expected.end(), verdict.oracle_id) !=
                expected.end()) {
          expected_failure = &verdict;
          break;
        }
      }
      if (expected_failure != nullptr) {
        ++result.expected_oracle_detections[mutant->mutant_id];
      }

      if (options.corpus_dir.has_value() &&
          saved_failures < options.max_saved_failures) {
        const OracleVerdict& chosen =
            expected_failure != nullptr ? *expected_failure : *first_failure;
        FailureRecord rec;
        rec.id = trial_name(trial) + "_" + mutant->mutant_id;
        rec.seed = trial_seed;
        rec.trial = trial;
        rec.mutant = *mutant;
        rec.oracle_id = chosen.oracle_id;
        rec.measured = chosen.measured;
        rec.message = chosen.message;
        save_failure(*options.corpus_dir, rec, circuit);
        ++saved_failures;
        if (!circuit_saved) {
          save_corpus_circuit(*options.corpus_dir, trial_name(trial), circuit);
          circuit_saved = true;
        }
      }
    };

    CorrectBackend correct;
    record("correct",
           run_all_oracles(circuit, ensemble, probes, correct, tol,
                           options.oracles_enabled, rev),
           nullptr);

    for (const MutantSpec& spec : resolved) {
      if (trial_non_degenerate(spec, circuit)) {
        ++result.non_degenerate_trials[spec.mutant_id];
      }
      auto backend = make_mutant(spec, rng);
      record(spec.mutant_id,
             run_all_oracles(circuit, ensemble, probes, *backend, tol,
                             options.oracles_enabled, rev),
             &spec);
    }
  }

  result.trials_run = trials;
  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return result;
}

}  // namespace qoracle
