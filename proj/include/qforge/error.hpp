#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qforge {

// Stable machine-readable failure codes. Input errors map to CLI exit code 2,
// mathematical failures to exit code 1.
enum class ErrorCode {
  MixedDegree,
  MixedField,
  DimensionMismatch,
  ResourceBound,
  ZeroElement,
  NotCentral,
  NotClifford,
  PBWFailure,
  NotFiniteDimensional,
  NotFrobeniusTop,
  NondegeneracyFailure,
  InhomogeneousRadical,
  NotStabilized,
  NotRegular,
  WNotCentral,
  NameClash,
  FieldLacksI,
  RelationNotKilled,
  CertificateFailure,
  SyntaxError,
  DegreeError,
  UnknownGenerator,
  UnknownName,
  ArityMismatch,
  InconsistentTheta,
  UsageError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// True for failures caused by the input (bad file, unsupported field, hypothesis
// violated by the user's data) as opposed to a failed mathematical certificate.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qforge
