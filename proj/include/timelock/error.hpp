#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace timelock {

enum class ErrorCode {
  NonFinite,
  EmptySignal,
  BadEvents,
  BadRate,
  MissingEvent,
  DuplicateEvent,
  DegenerateInterval,
  SegmentTooShort,
  BadOutputLength,
  RangeOutOfBounds,
  BadTarget,
  EmptyBatch,
  InconsistentTrials,
  LengthMismatch,
  ZeroVariance,
  EmptyInput,
  NyquistViolation,
  BadEventFracs,
  BadConfig,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every library operation. The code identifies the
/// violated precondition; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace timelock
