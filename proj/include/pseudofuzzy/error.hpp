#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pseudofuzzy {

enum class ErrorCode {
  NonFinite,
  MuOutOfRange,
  LambdaOutOfRange,
  BadTolerance,
  UnsortedSupport,
  DuplicateSupportPoint,
  BadShape,
  BadInterval,
  AlphaOutOfRange,
  BetaOutOfRange,
  ParamOutOfRange,
  BadRange,
  BadCount,
  BadCutTable,
  KindMismatch,
  ZeroScale,
  DivisorStraddlesZero,
  Parse,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type. `index` is set
// when the failure is attributable to one element of a sequence.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace pseudofuzzy

namespace pseudofuzzy::detail {

// Shortest round-trip text of a double, for error messages.
std::string number_text(double value);

}  // namespace pseudofuzzy::detail
