#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rankcorr {

enum class ErrorCode {
  EmptyInput,
  DuplicateValue,
  OutOfRangeValue,
  TiesPresent,
  LengthMismatch,
  TooLarge,
  InvalidPosition,
  DegenerateLength,
  ZeroVariance,
  InfeasibleFlatBound,
  FlatDenominator,
  BoundConsistency,
  OutOfDomain,
  InvalidLength,
  RankDeficient,
  UnknownConfig,
  SchemaError,
  VersionMismatch,
  ParseError,
  InsufficientOverlap,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DuplicateValue: return "DuplicateValue";
    case ErrorCode::OutOfRangeValue: return "OutOfRangeValue";
    case ErrorCode::TiesPresent: return "TiesPresent";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidPosition: return "InvalidPosition";
    case ErrorCode::DegenerateLength: return "DegenerateLength";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::InfeasibleFlatBound: return "InfeasibleFlatBound";
    case ErrorCode::FlatDenominator: return "FlatDenominator";
    case ErrorCode::BoundConsistency: return "BoundConsistencyError";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::InvalidLength: return "InvalidLength";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::UnknownConfig: return "UnknownConfig";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InsufficientOverlap: return "InsufficientOverlap";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rankcorr
