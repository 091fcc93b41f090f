#include "laga/error.hpp"

namespace laga {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EdgeLevelMismatch: return "EdgeLevelMismatch";
    case ErrorKind::EmptySuccessor: return "EmptySuccessor";
    case ErrorKind::MultipleMinimal: return "MultipleMinimal";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::MixedLevels: return "MixedLevels";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
    case ErrorKind::NotUniform: return "NotUniform";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::NonNestingViolated: return "NonNestingViolated";
    case ErrorKind::ReconstructionFailed: return "ReconstructionFailed";
  }
  return "Unknown";
}

}  // namespace laga
