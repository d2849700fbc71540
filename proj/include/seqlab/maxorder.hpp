#pragma once

// Nth maximum-order complexity M(S,N): the least m such that every m-window
// of the prefix determines its successor. M is 1 + the length of the longest
// factor followed by both 0 and 1; a constant prefix has M = 0.

#include <cstddef>
#include <optional>
#include <vector>

#include "seqlab/numtheory.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

// Windows of `length` = m - 1 at positions i < j agree and are followed by
// different bits: w[i + length] != w[j + length].
struct MocWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t length = 0;

  friend bool operator==(const MocWitness&, const MocWitness&) = default;
};

struct MocResult {
  std::size_t m = 0;
  std::optional<MocWitness> witness;  // present whenever m >= 1
};

// Linear time via a suffix automaton of the whole word.
MocResult moc(const Word& w);

// M for every prefix, built online; nondecreasing.
Profile<std::size_t> moc_profile(const Word& w);

// Naive successor-map search for m = 0, 1, 2, ...; the test oracle.
// OracleBoundExceeded when w is longer than `bound`.
MocResult moc_oracle(const Word& w, std::size_t bound);
MocResult moc_oracle(const Word& w);

// M(S) = M(S, 2T - 1) on the least period.
std::size_t moc_periodic(const PeriodicSequence& s);

// D_A = {A * 2^n mod q : 0 <= n < ord_q(2)}, sorted ascending.
std::vector<BigInt> coset(const BigInt& A, const BigInt& q);

// Least N with the elements of D_A pairwise distinct modulo 2^N. Equals
// moc_periodic(fcsr_word(A, q)). A period-1 sequence yields 0.
std::size_t moc_from_coset(const BigInt& A, const BigInt& q);

// floor(log2 q) for q in {3, 5, 9}, ceil(log2 q) otherwise; q must be an
// l-sequence modulus (NotEllModulus).
std::size_t moc_ell_formula(const BigInt& q);

}  // namespace seqlab
