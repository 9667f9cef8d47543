#include "cohmix/error.hpp"

namespace cohmix {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::BadSpectrum: return "BadSpectrum";
    case ErrorKind::InconsistentPhases: return "InconsistentPhases";
    case ErrorKind::NotCircleState: return "NotCircleState";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::OptimizerFailed: return "OptimizerFailed";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::OrderingViolated: return "OrderingViolated";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::SpectraMismatch: return "SpectraMismatch";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& detail, double measured) {
  std::string msg{to_string(kind)};
  if (!detail.empty()) msg += ": " + detail;
  if (measured == measured) msg += " (measured " + std::to_string(measured) + ")";
  return msg;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& detail, double measured)
    : std::runtime_error(compose(kind, detail, measured)), kind_(kind), measured_(measured) {}

void raise(ErrorKind kind, const std::string& detail, double measured) {
  throw Error(kind, detail, measured);
}

}  // namespace cohmix
