#include "timelock/error.hpp"

namespace timelock {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::EmptySignal: return "EmptySignal";
    case ErrorCode::BadEvents: return "BadEvents";
    case ErrorCode::BadRate: return "BadRate";
    case ErrorCode::MissingEvent: return "MissingEvent";
    case ErrorCode::DuplicateEvent: return "DuplicateEvent";
    case ErrorCode::DegenerateInterval: return "DegenerateInterval";
    case ErrorCode::SegmentTooShort: return "SegmentTooShort";
    case ErrorCode::BadOutputLength: return "BadOutputLength";
    case ErrorCode::RangeOutOfBounds: return "RangeOutOfBounds";
    case ErrorCode::BadTarget: return "BadTarget";
    case ErrorCode::EmptyBatch: return "EmptyBatch";
    case ErrorCode::InconsistentTrials: return "InconsistentTrials";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NyquistViolation: return "NyquistViolation";
    case ErrorCode::BadEventFracs: return "BadEventFracs";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

}  // namespace timelock
