#pragma once

// Command-line front end. The tool's main() is a thin wrapper over run().

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqlab/generators.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

enum class Family { Zero, Ones, Pattern, Zeckendorf, Legendre, Ell, Lfsr, File };

std::string_view to_string(Family f) noexcept;

// NAME(:key=value(,key=value)*)?(@poly=EXPR)?
//   zero | ones | thue-morse | rudin-shapiro | zeckendorf
//   pattern:k=K
//   legendre:p=P(,f=EXPR)?        f defaults to n
//   ell:q=Q(,A=A)?                A defaults to 1
//   lfsr:r=R,taps=T0+T1+...,seed=BITS
//   file:path=PATH
// @poly=EXPR takes the sequence along f(n); only for the index families
// (zero, ones, pattern, zeckendorf).
struct SeqSpec {
  Family family = Family::Zero;
  unsigned k = 1;
  BigInt p;
  BigInt q;
  BigInt A = 1;
  PolySpec f;  // legendre argument
  LfsrSpec lfsr;
  std::string path;
  std::optional<PolySpec> along;
  std::string text;
};

SeqSpec parse_seqspec(std::string_view text);

// Univariate integer polynomial in n: "n", "n^2", "3*n^3-2*n+1", "7".
// `offset` shifts the reported error position.
PolySpec parse_poly(std::string_view text, std::size_t offset = 0);

// First n terms. For file specs n = 0 means the whole file.
Word materialize(const SeqSpec& spec, std::size_t n);

// One period for the periodic families; nullopt for pattern and zeckendorf.
// A file is read as one period.
std::optional<PeriodicSequence> periodic_of(const SeqSpec& spec);

// Exit code: 0 ok, 1 a verifier failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace seqlab
