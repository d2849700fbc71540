#include "seqlab/error.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "seqlab/bounds.hpp"

namespace seqlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonInvertible: return "NonInvertible";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotOddPrime: return "NotOddPrime";
    case ErrorCode::MalformedBitFile: return "MalformedBitFile";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::EvenModulus: return "EvenModulus";
    case ErrorCode::ZeroSeed: return "ZeroSeed";
    case ErrorCode::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorCode::NotEllModulus: return "NotEllModulus";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      position_(position) {}

OracleBounds parse_oracle_bounds(std::string_view text) {
  OracleBounds bounds;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::InvalidParameter,
                  "oracle bound entry without '=': " + std::string(item));
    }
    const auto key = item.substr(0, eq);
    const auto value_text = item.substr(eq + 1);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(
        value_text.data(), value_text.data() + value_text.size(), value);
    if (ec != std::errc{} || ptr != value_text.data() + value_text.size()) {
      throw Error(ErrorCode::InvalidParameter,
                  "bad oracle bound value: " + std::string(item));
    }
    if (key == "moc") {
      bounds.moc = value;
    } else if (key == "adic") {
      bounds.adic = value;
    } else if (key == "corr") {
      bounds.corr = value;
    } else if (key == "expansion") {
      bounds.expansion = value;
    } else {
      throw Error(ErrorCode::InvalidParameter,
                  "unknown oracle bound: " + std::string(key));
    }
  }
  return bounds;
}

const OracleBounds& oracle_bounds() {
  static const OracleBounds bounds = [] {
    const char* env = std::getenv("SEQLAB_ORACLE_BOUNDS");
    return env ? parse_oracle_bounds(env) : OracleBounds{};
  }();
  return bounds;
}

}  // namespace seqlab
