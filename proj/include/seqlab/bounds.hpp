#pragma once

#include <cstddef>
#include <string_view>

namespace seqlab {

// Size limits of the brute-force oracles and the combinatorial measures.
// Defaults can be raised for long runs with the SEQLAB_ORACLE_BOUNDS
// environment variable, e.g. "moc=5000,adic=22,corr=4096,expansion=2000".
struct OracleBounds {
  std::size_t moc = 2000;        // moc_oracle word length
  std::size_t adic = 20;         // adic_oracle prefix length (2^N work)
  std::size_t corr = 2048;       // correlation_k word length for k >= 3
  std::size_t expansion = 4096;  // expansion_complexity prefix length
};

// Parses "key=value(,key=value)*"; unknown keys or malformed values throw
// InvalidParameter.
OracleBounds parse_oracle_bounds(std::string_view text);

// Defaults overlaid with SEQLAB_ORACLE_BOUNDS, read once per process.
const OracleBounds& oracle_bounds();

}  // namespace seqlab
