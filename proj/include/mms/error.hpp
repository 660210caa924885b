#pragma once

#include <stdexcept>
#include <string>

namespace mms {

enum class ErrorCode {
  InvalidInput,
  ParseError,
  EmptyGraph,
  NoPerfectMatching,
  NoPerfect2Matching,
  NoBFactor,
  InvalidSTPair,
  NotGraphical,
  UnsupportedOddLength,
  CapExceeded,
  GuardExceeded,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::NoPerfect2Matching: return "NoPerfect2Matching";
    case ErrorCode::NoBFactor: return "NoBFactor";
    case ErrorCode::InvalidSTPair: return "InvalidSTPair";
    case ErrorCode::NotGraphical: return "NotGraphical";
    case ErrorCode::UnsupportedOddLength: return "UnsupportedOddLength";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mms
