#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pbz {

enum class errc {
  not_a_poset,
  not_bounded,
  not_a_lattice,
  empty_subset,
  not_involutive,
  not_antitone,
  bz_axiom_failure,
  not_dual_iso,
  trivial_lower_part,
  not_pseudo_kleene,
  side_condition_violated,
  mixed_flavors,
  not_a_congruence,
  param_out_of_range,
  size_guard_exceeded,
  syntax_error,
  missing_operation,
  guard_exceeded,
  unknown_name,
  missing_param,
  not_antiortholattice,
  invalid_input,
};

inline std::string_view to_string(errc code) {
  switch (code) {
    case errc::not_a_poset: return "NotAPoset";
    case errc::not_bounded: return "NotBounded";
    case errc::not_a_lattice: return "NotALattice";
    case errc::empty_subset: return "EmptySubset";
    case errc::not_involutive: return "NotInvolutive";
    case errc::not_antitone: return "NotAntitone";
    case errc::bz_axiom_failure: return "BZAxiomFailure";
    case errc::not_dual_iso: return "NotDualIso";
    case errc::trivial_lower_part: return "TrivialLowerPart";
    case errc::not_pseudo_kleene: return "NotPseudoKleene";
    case errc::side_condition_violated: return "SideConditionViolated";
    case errc::mixed_flavors: return "MixedFlavors";
    case errc::not_a_congruence: return "NotACongruence";
    case errc::param_out_of_range: return "ParamOutOfRange";
    case errc::size_guard_exceeded: return "SizeGuardExceeded";
    case errc::syntax_error: return "SyntaxError";
    case errc::missing_operation: return "MissingOperation";
    case errc::guard_exceeded: return "GuardExceeded";
    case errc::unknown_name: return "UnknownName";
    case errc::missing_param: return "MissingParam";
    case errc::not_antiortholattice: return "NotAntiortholattice";
    case errc::invalid_input: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type. The message
/// always starts with the error name followed by the witness in parentheses,
/// e.g. "NotALattice(2,3): no least upper bound".
class error : public std::runtime_error {
 public:
  error(errc code, std::string_view witness, std::string_view detail = {})
      : std::runtime_error(format(code, witness, detail)), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  static std::string format(errc code, std::string_view witness, std::string_view detail) {
    std::string s(to_string(code));
    s += '(';
    s += witness;
    s += ')';
    if (!detail.empty()) {
      s += ": ";
      s += detail;
    }
    return s;
  }

  errc code_;
};

}  // namespace pbz
