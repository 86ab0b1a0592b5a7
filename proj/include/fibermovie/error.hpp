#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibermovie {

enum class ErrorCode {
  MalformedToken,
  IndexOutOfRange,
  MixedSign,
  MissingGenerator,
  NotHomogeneous,
  InvalidSlice,
  SingularAngle,
  MalformedSingularity,
  NoSuchRow,
  PatternMismatch,
  LeafNotInward,
  UnbalancedWinding,
  WrongRegions,
  EndpointAngleMismatch,
  SignMismatch,
  ConstructionFailure,
  ParseError,
  Io,
};

std::string_view to_string(ErrorCode code);

/// All library failures carry a machine-readable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MixedSign: return "MixedSign";
    case ErrorCode::MissingGenerator: return "MissingGenerator";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::InvalidSlice: return "InvalidSlice";
    case ErrorCode::SingularAngle: return "SingularAngle";
    case ErrorCode::MalformedSingularity: return "MalformedSingularity";
    case ErrorCode::NoSuchRow: return "NoSuchRow";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::LeafNotInward: return "LeafNotInward";
    case ErrorCode::UnbalancedWinding: return "UnbalancedWinding";
    case ErrorCode::WrongRegions: return "WrongRegions";
    case ErrorCode::EndpointAngleMismatch: return "EndpointAngleMismatch";
    case ErrorCode::SignMismatch: return "SignMismatch";
    case ErrorCode::ConstructionFailure: return "ConstructionFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace fibermovie
