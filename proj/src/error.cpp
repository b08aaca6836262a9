#include "pseudofuzzy/error.hpp"

#include <charconv>

namespace pseudofuzzy {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::MuOutOfRange: return "MuOutOfRange";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::BadTolerance: return "BadTolerance";
    case ErrorCode::UnsortedSupport: return "UnsortedSupport";
    case ErrorCode::DuplicateSupportPoint: return "DuplicateSupportPoint";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::BetaOutOfRange: return "BetaOutOfRange";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::BadCount: return "BadCount";
    case ErrorCode::BadCutTable: return "BadCutTable";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::DivisorStraddlesZero: return "DivisorStraddlesZero";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> index)
    : std::runtime_error(message), code_(code), index_(index) {}

}  // namespace pseudofuzzy

namespace pseudofuzzy::detail {

std::string number_text(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace pseudofuzzy::detail
