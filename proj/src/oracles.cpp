#include "qoracle/oracles.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "qoracle/rng.hpp"

namespace qoracle {

namespace {

std::string format_real(Real value) {
  std::ostringstream out;
  out.precision(12);
  out << value;
  return out.str();
}

OracleVerdict execution_failure(OracleId id, const SimulationError& error,
                                const std::string& where) {
  OracleVerdict verdict;
  verdict.oracle_id = id;
  verdict.passed = false;
  verdict.measured["execution_error"] = 1.0;
  verdict.location = error.instruction_index.has_value()
                         ? std::to_string(*error.instruction_index)
                         : where;
  verdict.message =
      "execution_error=1 while " + where + ": " + error.what();
  return verdict;
}

}  // namespace

Real shannon_entropy_bits(std::span<const Real> masses) {
  Real entropy = 0.0;
  for (Real p : masses) {
    if (p > 0.0) {
      entropy -= p * std::log2(p);
    }
  }
  return entropy;
}

OracleVerdict check_probability(const ProbabilityDistribution& distribution,
                                const ToleranceConfig& tol) {
  OracleVerdict verdict;
  verdict.oracle_id = OracleId::kProbability;
  verdict.location = "final";

  Real sum = 0.0;
  Real min_prob = std::numeric_limits<Real>::infinity();
  Real max_prob = -std::numeric_limits<Real>::infinity();
  for (Eigen::Index i = 0; i < distribution.size(); ++i) {
    const Real p = distribution[i];
    sum += p;
    // NaN must not slip through a negated comparison.
    if (!(p >= min_prob)) min_prob = p;
    if (!(p <= max_prob)) max_prob = p;
  }
  if (distribution.size() == 0) {
    min_prob = 0.0;
    max_prob = 0.0;
  }
  verdict.measured["min_prob"] = min_prob;
  verdict.measured["max_prob"] = max_prob;
  verdict.measured["sum"] = sum;

  const bool range_low_ok = min_prob >= -tol.epsilon_prob;
  const bool range_high_ok = max_prob <= 1.0 + tol.epsilon_prob;
  const bool sum_ok = std::abs(sum - 1.0) <= tol.epsilon_sum;
  verdict.passed = range_low_ok && range_high_ok && sum_ok;

  std::ostringstream msg;
  if (verdict.passed) {
    msg << "all probabilities within range, sum=" << format_real(sum);
  } else {
    const char* sep = "";
    if (!range_low_ok) {
      msg << "min_prob=" << format_real(min_prob) << " below -epsilon_prob";
      sep = "; ";
    }
    if (!range_high_ok) {
      msg << sep << "max_prob=" << format_real(max_prob)
          << " above 1+epsilon_prob";
      sep = "; ";
    }
    if (!sum_ok) {
      msg << sep << "sum=" << format_real(sum)
          << " outside 1 +/- epsilon_sum";
    }
  }
  verdict.message = msg.str();
  return verdict;
}

OracleVerdict check_width(const ExecutionTrace& trace) {
  if (trace.states.empty()) {
    throw StructuralError("width check needs a non-empty trace");
  }

  OracleVerdict verdict;
  verdict.oracle_id = OracleId::kWidth;
  verdict.location = "final";
  const int expected = trace.circuit.num_qubits;
  verdict.measured["expected"] = static_cast<Real>(expected);

  for (std::size_t i = 0; i < trace.states.size(); ++i) {
    const StateVector& state = trace.states[i];
    const auto expected_len = std::uint64_t{1}
                              << std::max(state.num_qubits, 0);
    const bool width_ok = state.num_qubits == expected;
    const bool length_ok =
        state.num_qubits >= 0 &&
        static_cast<std::uint64_t>(state.amplitudes.size()) == expected_len;
    if (width_ok && length_ok) continue;

    verdict.passed = false;
    verdict.measured["actual"] = static_cast<Real>(state.num_qubits);
    verdict.measured["amplitude_count"] =
        static_cast<Real>(state.amplitudes.size());
    verdict.location = i == 0 ? "initial" : std::to_string(i - 1);
    std::ostringstream msg;
    if (!width_ok) {
      msg << "actual=" << state.num_qubits << " qubits, expected=" << expected;
    } else {
      msg << "amplitude_count=" << state.amplitudes.size()
          << " does not match declared width " << state.num_qubits;
    }
    verdict.message = msg.str();
    return verdict;
  }

  verdict.passed = true;
  verdict.measured["actual"] = static_cast<Real>(expected);
  verdict.message = "width " + std::to_string(expected) +
                    " conserved across " + std::to_string(trace.states.size()) +
                    " recorded states";
  return verdict;
}

OracleVerdict check_reversibility(const Circuit& circuit,
                                  std::span<const StateVector> inputs,
                                  const Backend& backend,
                                  const ToleranceConfig& tol,
                                  const ReversibilityOptions& options) {
  if (inputs.empty()) {
    throw StructuralError("reversibility check needs at least one input");
  }
  for (const StateVector& input : inputs) {
    if (input.num_qubits != circuit.num_qubits) {
      throw StructuralError("reversibility input width " +
                            std::to_string(input.num_qubits) +
                            " does not match circuit width " +
                            std::to_string(circuit.num_qubits));
    }
  }

  const int length = static_cast<int>(circuit.instructions.size());
  std::vector<std::pair<int, int>> units;
  switch (options.granularity) {
    case Granularity::kWhole:
      units.emplace_back(0, length);
      break;
    case Granularity::kPerGate:
      for (int i = 0; i < length; ++i) units.emplace_back(i, i + 1);
      break;
    case Granularity::kFragments: {
      Rng rng(options.fragment_seed);
      for (int k = 0; k < options.fragment_count; ++k) {
        if (length == 0) {
          units.emplace_back(0, 0);
        } else {
          const int i = rng.range(0, length - 1);
          const int j = rng.range(i, length - 1) + 1;
          units.emplace_back(i, j);
        }
      }
      break;
    }
  }

  OracleVerdict verdict;
  verdict.oracle_id = OracleId::kReversibility;
  Real min_fidelity = std::numeric_limits<Real>::infinity();
  std::pair<int, int> worst_unit{0, length};
  int round_trips = 0;

  const bool needs_prefix_states =
      options.granularity != Granularity::kWhole && length > 0;

  for (const StateVector& input : inputs) {
    std::vector<StateVector> before;  // state ahead of instruction i
    if (needs_prefix_states) {
      auto tracer = backend.fork();
      try {
        before = run_forward(circuit, input, *tracer, true).states;
      } catch (const SimulationError& e) {
        return execution_failure(OracleId::kReversibility, e,
                                 "tracing fragment inputs");
      }
    }

    for (const auto& [begin, end] : units) {
      const StateVector& unit_input = begin == 0 ? input : before[begin];
      Circuit fragment;
      fragment.num_qubits = circuit.num_qubits;
      fragment.instructions.assign(circuit.instructions.begin() + begin,
                                   circuit.instructions.begin() + end);
      auto runner = backend.fork();
      Real trip_fidelity = 0.0;
      try {
        trip_fidelity = run_roundtrip(fragment, unit_input, *runner).fidelity;
      } catch (const SimulationError& e) {
        OracleVerdict failure = execution_failure(
            OracleId::kReversibility, e,
            "round-tripping instructions [" + std::to_string(begin) + ", " +
                std::to_string(end) + ")");
        if (!e.instruction_index.has_value()) {
          failure.location = std::to_string(begin);
        } else {
          failure.location = std::to_string(begin + *e.instruction_index);
        }
        return failure;
      }
      ++round_trips;
      if (trip_fidelity < min_fidelity) {
        min_fidelity = trip_fidelity;
        worst_unit = {begin, end};
      }
    }
  }

  if (round_trips == 0) {
    min_fidelity = 1.0;  // nothing to round-trip, vacuous pass
  }
  verdict.measured["min_fidelity"] = min_fidelity;
  verdict.measured["round_trips"] = static_cast<Real>(round_trips);
  verdict.passed = min_fidelity >= 1.0 - tol.epsilon_fidelity;
  verdict.location = options.granularity == Granularity::kWhole
                         ? "final"
                         : std::to_string(worst_unit.first);

  std::ostringstream msg;
  msg << "min_fidelity=" << format_real(min_fidelity) << " over "
      << round_trips << " round trip(s)";
  if (!verdict.passed) {
    msg << ", below 1-epsilon_fidelity at instructions ["
        << worst_unit.first << ", " << worst_unit.second << ")";
  }
  verdict.message = msg.str();
  return verdict;
}

Real ensemble_entropy_in(const Ensemble& ensemble) {
  std::vector<Real> weights;
  weights.reserve(ensemble.members.size());
  for (const EnsembleMember& member : ensemble.members) {
    weights.push_back(member.weight);
  }
  return shannon_entropy_bits(weights);
}

Real ensemble_entropy_out(const Ensemble& ensemble, const Circuit& circuit,
                          const Backend& backend, const ToleranceConfig& tol) {
  validate_ensemble(ensemble, tol);
  if (ensemble.members.front().input.num_qubits != circuit.num_qubits) {
    throw StructuralError("ensemble width does not match circuit width");
  }

  std::vector<Real> masses;
  if (!ensemble.post_measurement) {
    // Group output states up to global phase on the rounding grid; the
    // entropy of the class masses is the output entropy.
    std::map<Fingerprint, Real> classes;
    for (const EnsembleMember& member : ensemble.members) {
      if (member.weight <= 0.0) continue;
      auto runner = backend.fork();
      const ExecutionTrace trace =
          run_forward(circuit, member.input, *runner, false);
      classes[canonical_fingerprint(trace.final_state,
                                    tol.fingerprint_grid)] += member.weight;
    }
    masses.reserve(classes.size());
    for (const auto& [fp, mass] : classes) masses.push_back(mass);
  } else {
    // Collapse each output to its exact outcome distribution and take the
    // entropy of the pooled classical mixture.
    std::map<std::uint64_t, Real> outcome_mass;
    for (const EnsembleMember& member : ensemble.members) {
      if (member.weight <= 0.0) continue;
      auto runner = backend.fork();
      const ExecutionTrace trace =
          run_forward(circuit, member.input, *runner, false);
      for (Eigen::Index j = 0; j < trace.final_distribution.size(); ++j) {
        outcome_mass[static_cast<std::uint64_t>(j)] +=
            member.weight * trace.final_distribution[j];
      }
    }
    masses.reserve(outcome_mass.size());
    for (const auto& [outcome, mass] : outcome_mass) masses.push_back(mass);
  }
  return shannon_entropy_bits(masses);
}

OracleVerdict check_entropy(const Ensemble& ensemble, const Circuit& circuit,
                            const Backend& backend,
                            const ToleranceConfig& tol) {
  OracleVerdict verdict;
  verdict.oracle_id = OracleId::kEntropy;
  verdict.location = "ensemble";

  const Real entropy_in = ensemble_entropy_in(ensemble);
  Real entropy_out = 0.0;
  try {
    entropy_out = ensemble_entropy_out(ensemble, circuit, backend, tol);
  } catch (const SimulationError& e) {
    OracleVerdict failure = execution_failure(OracleId::kEntropy, e,
                                              "running the ensemble");
    failure.location = "ensemble";
    failure.measured["entropy_in"] = entropy_in;
    return failure;
  }

  verdict.measured["entropy_in"] = entropy_in;
  verdict.measured["entropy_out"] = entropy_out;
  const Real delta = entropy_out - entropy_in;

  std::ostringstream msg;
  if (ensemble.post_measurement) {
    verdict.passed = delta <= tol.epsilon_entropy;
    if (verdict.passed) {
      msg << "entropy_out=" << format_real(entropy_out)
          << " did not increase from entropy_in=" << format_real(entropy_in);
    } else {
      msg << "entropy_out=" << format_real(entropy_out)
          << " increased above entropy_in=" << format_real(entropy_in)
          << " after measurement";
    }
  } else {
    verdict.passed = std::abs(delta) <= tol.epsilon_entropy;
    if (verdict.passed) {
      msg << "entropy conserved: entropy_in=" << format_real(entropy_in)
          << ", entropy_out=" << format_real(entropy_out);
    } else {
      msg << "entropy_out=" << format_real(entropy_out)
          << " differs from entropy_in=" << format_real(entropy_in) << " by "
          << format_real(std::abs(delta));
    }
  }
  verdict.message = msg.str();
  return verdict;
}

}  // namespace qoracle
