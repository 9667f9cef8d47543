#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cohmix {

enum class ErrorKind {
  NotSquare,
  NonFinite,
  NotHermitian,
  TraceNotOne,
  NotPSD,
  NotUnitary,
  DimensionMismatch,
  DimensionTooSmall,
  WrongDimension,
  LengthMismatch,
  ParamOutOfRange,
  BadSpectrum,
  InconsistentPhases,
  NotCircleState,
  NotConverged,
  OptimizerFailed,
  Degenerate,
  OrderingViolated,
  InvalidState,
  SpectraMismatch,
  DegenerateSpectrum,
  ParseError,
  IoError,
};

/// Stable identifier used in messages and CLI diagnostics, e.g. "NotPSD".
std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `measured()` carries the observed
/// violation (NaN when there is no meaningful magnitude).
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& detail, double measured = kNoMeasurement);

  ErrorKind kind() const noexcept { return kind_; }
  double measured() const noexcept { return measured_; }

  static constexpr double kNoMeasurement = __builtin_nan("");

private:
  ErrorKind kind_;
  double measured_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& detail,
                        double measured = Error::kNoMeasurement);

}  // namespace cohmix
