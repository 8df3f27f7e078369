#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigma {

enum class ErrorCode {
  ZeroCharacter,
  DimensionMismatch,
  WrongSpace,
  ParameterOutOfRange,
  DegenerateTriangle,
  NotAsymptotic,
  UnknownGenerator,
  DepthExhausted,
  EndNotFixed,
  EmptyConfiguration,
  NotClosed,
  UnsupportedNumberForm,
  UnknownVertex,
  DegreeOutOfRange,
  InvalidChain,
  NotTranslationAction,
  UnsupportedDimension,
  InvariantViolation,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported through this type; the
/// code is stable and is what the CLI prints in its diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sigma
