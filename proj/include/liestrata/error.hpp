#pragma once

#include <stdexcept>
#include <string>

namespace liestrata {

enum class ErrorCode {
  ParseError,
  IndexOutOfRange,
  OrderViolation,
  Duplicate,
  ZeroEntry,
  DimensionMismatch,
  RequiresTheta,
  NotAligned,
  UnknownQuadruple,
  OutsideDomain,
  NonPositiveCenter,
  WNotQuadrupleDerived,
  UnsupportedShape,
  CapExceeded,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::Duplicate: return "Duplicate";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RequiresTheta: return "RequiresTheta";
    case ErrorCode::NotAligned: return "NotAligned";
    case ErrorCode::UnknownQuadruple: return "UnknownQuadruple";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::NonPositiveCenter: return "NonPositiveCenter";
    case ErrorCode::WNotQuadrupleDerived: return "WNotQuadrupleDerived";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace liestrata
