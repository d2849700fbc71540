#pragma once

// Companion measures: linear complexity (Berlekamp-Massey), the correlation
// measure of order k and the expansion complexity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "seqlab/sequence.hpp"

namespace seqlab {

// Polynomial over F_2, packed; bit i is the coefficient of x^i.
class GF2Poly {
 public:
  GF2Poly() = default;
  static GF2Poly one() { return monomial(0); }
  static GF2Poly monomial(std::size_t degree);
  static GF2Poly from_word(const Word& w);

  // -1 for the zero polynomial.
  long degree() const noexcept;
  bool is_zero() const noexcept { return degree() < 0; }
  bool coefficient(std::size_t i) const noexcept;
  void set(std::size_t i, bool value);

  // this += other * x^shift
  void add_shifted(const GF2Poly& other, std::size_t shift);
  GF2Poly& operator+=(const GF2Poly& other) {
    add_shifted(other, 0);
    return *this;
  }
  // Keeps only the terms below x^n.
  void truncate(std::size_t n);
  // (this * other) mod x^n
  GF2Poly mul_trunc(const GF2Poly& other, std::size_t n) const;

  std::span<const std::uint64_t> limbs() const noexcept { return limbs_; }

  friend bool operator==(const GF2Poly& a, const GF2Poly& b) noexcept;

 private:
  void normalize() noexcept;
  std::vector<std::uint64_t> limbs_;
};

struct LinearComplexity {
  std::size_t complexity = 0;
  GF2Poly connection;  // c_0 = 1, s_n = sum_{i=1..L} c_i s_{n-i}
};

// L(S, N) for N = 1..|w|; nondecreasing, L(S, N) <= N.
Profile<std::size_t> linear_profile(const Word& w);
LinearComplexity berlekamp_massey(const Word& w);

struct CorrelationWitness {
  std::size_t window = 0;            // U >= 1
  std::vector<std::size_t> offsets;  // d_1 < ... < d_k <= N - U
  long long value = 0;               // signed sum, |value| is the measure
};

struct CorrelationResult {
  std::size_t value = 0;
  CorrelationWitness witness;  // lexicographically least (U, D) at the max
};

// C_2 in O(N^2): per lag, the best window is max prefix sum - min prefix
// sum of x_j = (-1)^(s_j + s_{j+lag}). TooShort when |w| < 2.
CorrelationResult correlation2(const Word& w);

// C_2 of every prefix, O(N^2) total.
Profile<std::size_t> correlation2_profile(const Word& w);

// C_k for 2 <= k <= 4 by lag-tuple enumeration, O(N^k). BoundExceeded when
// k > 4 or (k >= 3 and |w| > bound).
CorrelationResult correlation_k(const Word& w, unsigned k, std::size_t bound);
CorrelationResult correlation_k(const Word& w, unsigned k);

struct Monomial {
  std::size_t x_degree = 0;
  std::size_t y_degree = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct ExpansionResult {
  std::optional<std::size_t> value;  // nullopt: no h of degree <= d_max
  std::vector<Monomial> witness;     // h = sum of these monomials
  bool above_bound() const noexcept { return !value.has_value(); }
};

// E(S, N): least total degree of a nonzero h(x, y) over F_2 with
// h(x, G(x)) = 0 mod x^N, G the generating function of the prefix; 0 for
// an all-zero prefix. Columns x^i G^j are added in degree order to an
// incremental F_2 basis; the first dependency gives the answer and h.
ExpansionResult expansion_complexity(const Word& w, std::size_t n,
                                     std::size_t d_max);

// Evaluates h(x, G(x)) mod x^n.
GF2Poly evaluate_bivariate(const std::vector<Monomial>& h, const Word& w,
                           std::size_t n);

}  // namespace seqlab
