#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arf {

enum class ErrorCode {
  EmptyInput,
  NotCofinite,
  NotAMember,
  NoGaps,
  NotMed,
  InvalidAdjunction,
  InconsistentTable,
  Contradiction,
  InvalidFrobenius,
  NotInCovariety,
  InvalidSequence,
  NotArf,
  InvalidRefinement,
  ScaleLimit,
  LimitExceeded,
  InvalidSemigroup,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotCofinite: return "NotCofinite";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::NoGaps: return "NoGaps";
    case ErrorCode::NotMed: return "NotMed";
    case ErrorCode::InvalidAdjunction: return "InvalidAdjunction";
    case ErrorCode::InconsistentTable: return "InconsistentTable";
    case ErrorCode::Contradiction: return "Contradiction";
    case ErrorCode::InvalidFrobenius: return "InvalidFrobenius";
    case ErrorCode::NotInCovariety: return "NotInCovariety";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::NotArf: return "NotArf";
    case ErrorCode::InvalidRefinement: return "InvalidRefinement";
    case ErrorCode::ScaleLimit: return "ScaleLimit";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::InvalidSemigroup: return "InvalidSemigroup";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (tests, the CLI) can branch on the kind without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arf
