#pragma once

#include <stdexcept>
#include <string>

namespace gring {

// Single exception type with a machine-checkable kind. Report-style
// operations (validation, scans) do not throw; they return reports.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    NonPrimeCharacteristic,
    ReducibleModulus,
    DivisionByZero,
    FieldMismatch,
    NotAGroup,
    NotASubgroup,
    NotNormal,
    ZeroLambdaEntry,
    BudgetExceeded,
    SystemMismatch,
    ZeroCode,
    NotKLinear,
    NotOneDimensional,
    ScalarExtractionFailed,
    NotScalarInvariant,
    PlanInconsistent,
    DecompositionFailed,
    ReductionStalled,
    InvalidArgument,
  };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace gring
