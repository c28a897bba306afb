#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace grdual {

/// Failure categories surfaced by the library. The CLI maps these onto its
/// exit-code contract: parse-class errors exit 2, cap/guard errors exit 3,
/// verification-class errors exit 4.
enum class Errc {
  carrier_mismatch,
  missing_empty_or_full,
  not_closed_under_union,
  not_closed_under_intersection,
  guard_exceeded,
  cap_exceeded,
  parse_error,
  not_truncatable,
  unknown_family,
  precondition_violated,
  fip_precondition_violated,
  witness_not_found,
  theorem_violation,
  rule_inconsistency,
  verification_failure,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::carrier_mismatch: return "CarrierMismatch";
    case Errc::missing_empty_or_full: return "MissingEmptyOrFull";
    case Errc::not_closed_under_union: return "NotClosedUnderUnion";
    case Errc::not_closed_under_intersection: return "NotClosedUnderIntersection";
    case Errc::guard_exceeded: return "GuardExceeded";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::parse_error: return "ParseError";
    case Errc::not_truncatable: return "NotTruncatable";
    case Errc::unknown_family: return "UnknownFamily";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::fip_precondition_violated: return "PreconditionFIPViolated";
    case Errc::witness_not_found: return "WitnessNotFound";
    case Errc::theorem_violation: return "TheoremViolation";
    case Errc::rule_inconsistency: return "RuleInconsistency";
    case Errc::verification_failure: return "VerificationFailure";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Carries the witness pair of a closure violation found by validate_topology.
class FamilyError : public Error {
 public:
  FamilyError(Errc code, const std::string& what, std::uint32_t lhs, std::uint32_t rhs)
      : Error(code, what), lhs_(lhs), rhs_(rhs) {}

  std::uint32_t lhs() const noexcept { return lhs_; }
  std::uint32_t rhs() const noexcept { return rhs_; }

 private:
  std::uint32_t lhs_;
  std::uint32_t rhs_;
};

/// A mechanical check that must hold found a counterexample. The payload is a
/// rendering of the offending object (topology JSON for census failures).
class VerificationError : public Error {
 public:
  VerificationError(Errc code, const std::string& what, std::string counterexample)
      : Error(code, what), counterexample_(std::move(counterexample)) {}

  const std::string& counterexample() const noexcept { return counterexample_; }

 private:
  std::string counterexample_;
};

}  // namespace grdual
