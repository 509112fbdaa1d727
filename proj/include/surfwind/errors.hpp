#pragma once

#include <stdexcept>
#include <string>

namespace surfwind {

enum class ErrorCode {
  UnwrapAmbiguous,
  SupportTooLarge,
  IndexMismatch,
  DegenerateEnds,
  OutOfDomain,
  GeometryMismatch,
  UnsupportedGeometry,
  SamplingTooCoarse,
  EndpointMismatch,
  CoincidentPoints,
  StraightAngle,
  NonIntegral,
  SelfCollisionOfTube,
  MissingReference,
  TraceClassMismatch,
  UnsupportedReversibility,
  BasePointMismatch,
  InvalidInput,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnwrapAmbiguous: return "UnwrapAmbiguous";
    case ErrorCode::SupportTooLarge: return "SupportTooLarge";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::DegenerateEnds: return "DegenerateEnds";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::GeometryMismatch: return "GeometryMismatch";
    case ErrorCode::UnsupportedGeometry: return "UnsupportedGeometry";
    case ErrorCode::SamplingTooCoarse: return "SamplingTooCoarse";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::StraightAngle: return "StraightAngle";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::SelfCollisionOfTube: return "SelfCollisionOfTube";
    case ErrorCode::MissingReference: return "MissingReference";
    case ErrorCode::TraceClassMismatch: return "TraceClassMismatch";
    case ErrorCode::UnsupportedReversibility: return "UnsupportedReversibility";
    case ErrorCode::BasePointMismatch: return "BasePointMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace surfwind
