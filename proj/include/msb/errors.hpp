#pragma once

#include <stdexcept>
#include <string>

namespace msb {

enum class ErrorCode {
  NonIncreasingGrid,
  NonPositiveVol,
  NonPositiveSpot,
  NonPositiveLevel,
  BarrierDirectionMismatch,
  ImmediateKnock,
  HypothesisViolated,
  DimensionTooLarge,
  NotPSD,
  ZeroReference,
  NonPositiveCurve,
  InvalidArgument,
  IoFailure,
};

const char* error_code_name(ErrorCode code);

/// Domain error carrying a stable machine-readable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace msb
