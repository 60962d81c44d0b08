#include "qoracle/tolerance.hpp"

namespace qoracle {

namespace {

void check_entry(const char* name, Real value) {
  if (!(value > 0.0) || value > 1e-3) {
    throw StructuralError(std::string(name) + " must be in (0, 1e-3], got " +
                          std::to_string(value));
  }
}

}  // namespace

void validate_tolerances(const ToleranceConfig& tol) {
  check_entry("epsilon_prob", tol.epsilon_prob);
  check_entry("epsilon_sum", tol.epsilon_sum);
  check_entry("epsilon_fidelity", tol.epsilon_fidelity);
  check_entry("epsilon_entropy", tol.epsilon_entropy);
  check_entry("fingerprint_grid", tol.fingerprint_grid);
}

}  // namespace qoracle
