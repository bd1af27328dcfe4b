#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gadgetforge {

enum class Errc {
  kResidueOutOfRange,
  kDigitOverflow,
  kNegativeResult,
  kParamViolation,
  kSearchBudgetExceeded,
  kGenerationFailed,
  kUnknownJob,
  kMachineOutOfRange,
  kCrossingJob,
  kNotZeroIdle,
  kDecompositionFailed,
  kMissingItem,
  kWidthExceeded,
  kNotContiguous,
  kNonIntegralY,
  kHeightExceeds4,
  kInvalidWitness,
  kNotTargetMakespan,
  kLemmaViolation,
  kInvalidInput,
};

std::string_view to_string(Errc code);

/// Typed failure raised by every library operation. The code identifies the
/// contract that was violated; the message carries the specifics.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gadgetforge
