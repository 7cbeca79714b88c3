#pragma once

#include <stdexcept>
#include <string>

namespace wegner7 {

enum class errc {
  asymmetric_rotation,
  euler_violation,
  input_violation,
  parse_error,
  not_facial,
  degree_too_low,
  not_cubic,
  no_light_pair,
  spec_mismatch,
  precondition_failed,
  no_decomposition,
  budget_exceeded,
  brooks_precondition_failed,
  unsat3,
  not_planar,
  unsat4,
  too_large,
  start_not_in_colors,
  over_budget,
  bad_n,
  certification_failed,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::asymmetric_rotation: return "AsymmetricRotation";
    case errc::euler_violation: return "EulerViolation";
    case errc::input_violation: return "InputViolation";
    case errc::parse_error: return "ParseError";
    case errc::not_facial: return "NotFacial";
    case errc::degree_too_low: return "DegreeTooLow";
    case errc::not_cubic: return "NotCubic";
    case errc::no_light_pair: return "NoLightPair";
    case errc::spec_mismatch: return "SpecMismatch";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::no_decomposition: return "NoDecomposition";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::brooks_precondition_failed: return "BrooksPreconditionFailed";
    case errc::unsat3: return "Unsat3";
    case errc::not_planar: return "NotPlanar";
    case errc::unsat4: return "Unsat4";
    case errc::too_large: return "TooLarge";
    case errc::start_not_in_colors: return "StartNotInColors";
    case errc::over_budget: return "OverBudget";
    case errc::bad_n: return "BadN";
    case errc::certification_failed: return "CertificationFailed";
  }
  return "Unknown";
}

/// All library failures are reported through this exception; `code()` names the
/// failure kind so callers (and the CLI exit-code mapping) can branch on it.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace wegner7
