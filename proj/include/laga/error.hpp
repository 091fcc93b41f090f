#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace laga {

enum class ErrorKind {
  InvalidArgument,
  EdgeLevelMismatch,
  EmptySuccessor,
  MultipleMinimal,
  UnsupportedField,
  MixedLevels,
  AmbientMismatch,
  BudgetExceeded,
  KOutOfRange,
  NotUniform,
  DimensionMismatch,
  LevelMismatch,
  VerificationFailed,
  NonNestingViolated,
  ReconstructionFailed,
};

std::string_view to_string(ErrorKind kind);

/// Every failure the library reports is a laga::Error tagged with its kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace laga
