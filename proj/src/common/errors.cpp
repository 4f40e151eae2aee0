#include "msb/errors.hpp"

namespace msb {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonIncreasingGrid: return "NonIncreasingGrid";
    case ErrorCode::NonPositiveVol: return "NonPositiveVol";
    case ErrorCode::NonPositiveSpot: return "NonPositiveSpot";
    case ErrorCode::NonPositiveLevel: return "NonPositiveLevel";
    case ErrorCode::BarrierDirectionMismatch: return "BarrierDirectionMismatch";
    case ErrorCode::ImmediateKnock: return "ImmediateKnock";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::ZeroReference: return "ZeroReference";
    case ErrorCode::NonPositiveCurve: return "NonPositiveCurve";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace msb
