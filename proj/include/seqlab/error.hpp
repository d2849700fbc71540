#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seqlab {

enum class ErrorCode {
  NonInvertible,
  NotCoprime,
  TooLarge,
  NotOddPrime,
  MalformedBitFile,
  NegativeValue,
  EvenModulus,
  ZeroSeed,
  OracleBoundExceeded,
  NotEllModulus,
  TooShort,
  BoundExceeded,
  ParseError,
  MissingParameter,
  InvalidParameter,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library. `position` carries a byte offset for
// MalformedBitFile / ParseError and the offending index for NegativeValue.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace seqlab
