#pragma once

// Every sequence family analysed by the laboratory: pattern sequences
// (Thue-Morse k=1, Rudin-Shapiro k=2), subsequences along polynomial values,
// the Zeckendorf digit-sum parity, Legendre sequences, FCSR / l-sequences and
// LFSR (m-)sequences.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "seqlab/numtheory.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

// Integer polynomial, constant term first. Degree 0 (a constant) is allowed.
class PolySpec {
 public:
  PolySpec() = default;
  explicit PolySpec(std::vector<BigInt> coefficients);

  static PolySpec identity() { return PolySpec({0, 1}); }

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  BigInt operator()(const BigInt& n) const;
  // Evaluation modulo m, result in [0, m).
  std::uint64_t eval_mod(std::uint64_t n, std::uint64_t m) const;

  std::string to_string() const;

  friend bool operator==(const PolySpec&, const PolySpec&) = default;

 private:
  std::vector<BigInt> coeffs_{0, 1};
};

using BitGenerator = std::function<bool(const BigInt&)>;

// Parity of the overlapping occurrences of 1^k in the binary expansion of n.
bool pattern_bit(unsigned k, std::uint64_t n);
bool pattern_bit(unsigned k, const BigInt& n);
Word pattern_word(unsigned k, std::size_t n);

inline bool thue_morse_bit(std::uint64_t n) { return pattern_bit(1, n); }
inline Word thue_morse_word(std::size_t n) { return pattern_word(1, n); }
inline Word rudin_shapiro_word(std::size_t n) { return pattern_word(2, n); }

// Bit n is base(f(n)); NegativeValue(n) if f(n) < 0.
Word along_polynomial(const BitGenerator& base, const PolySpec& f,
                      std::size_t n);

// Greedy Fibonacci digits: digits[i] is the coefficient of F_{i+2}.
std::vector<bool> zeckendorf_digits(const BigInt& n);
bool zeckendorf_bit(std::uint64_t n);
bool zeckendorf_bit(const BigInt& n);
Word zeckendorf_word(std::size_t n);

// Bit n is 1 iff (f(n)/p) = +1; residues with symbol 0 or -1 give 0.
Word legendre_word(const BigInt& p, const PolySpec& f, std::size_t n);
PeriodicSequence legendre_period(const BigInt& p, const PolySpec& f);

// s_n = ((A * 2^-n) mod q) mod 2 with 0 < A < q, gcd(A, q) = 1, q odd >= 3.
bool fcsr_bit(const BigInt& A, const BigInt& q, std::uint64_t n);
PeriodicSequence fcsr_word(const BigInt& A, const BigInt& q);

// s_{n+r} = sum over taps t of s_{n+t} (mod 2); taps are in [0, r).
struct LfsrSpec {
  unsigned degree = 0;
  std::vector<unsigned> taps;
  Word seed;  // length == degree, not all zero
};

Word lfsr_word(const LfsrSpec& spec, std::size_t n);
// One full period; needs tap 0 (otherwise the state map is not a
// permutation) and degree <= 32. Primitivity of the feedback polynomial is
// not checked.
PeriodicSequence lfsr_period(const LfsrSpec& spec);

}  // namespace seqlab
