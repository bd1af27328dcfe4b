#include "gadgetforge/error.hpp"

namespace gadgetforge {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kResidueOutOfRange: return "ResidueOutOfRange";
    case Errc::kDigitOverflow: return "DigitOverflow";
    case Errc::kNegativeResult: return "NegativeResult";
    case Errc::kParamViolation: return "ParamViolation";
    case Errc::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::kGenerationFailed: return "GenerationFailed";
    case Errc::kUnknownJob: return "UnknownJob";
    case Errc::kMachineOutOfRange: return "MachineOutOfRange";
    case Errc::kCrossingJob: return "CrossingJob";
    case Errc::kNotZeroIdle: return "NotZeroIdle";
    case Errc::kDecompositionFailed: return "DecompositionFailed";
    case Errc::kMissingItem: return "MissingItem";
    case Errc::kWidthExceeded: return "WidthExceeded";
    case Errc::kNotContiguous: return "NotContiguous";
    case Errc::kNonIntegralY: return "NonIntegralY";
    case Errc::kHeightExceeds4: return "HeightExceeds4";
    case Errc::kInvalidWitness: return "InvalidWitness";
    case Errc::kNotTargetMakespan: return "NotTargetMakespan";
    case Errc::kLemmaViolation: return "LemmaViolation";
    case Errc::kInvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace gadgetforge
