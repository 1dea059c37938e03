#pragma once

#include <stdexcept>
#include <string>

namespace tightspan {

/// Domain errors raised on violated operation preconditions.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    LengthMismatch,
    NotInDelta,
    NotExtremal,
    NotIntegerMetric,
    NotSubspace,
    NotLipschitz,
    EmptyDomain,
    EmptySubset,
    NotAdmissible,
    NotAGroup,
    NotCellular,
    BudgetExceeded,
    Disconnected,
    StabilityHypothesisFails,
    ZeroDimensional,
    InvalidInput,
  };

  Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* error_kind_name(Error::Kind kind);

}  // namespace tightspan
