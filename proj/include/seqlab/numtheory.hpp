#pragma once

// Arbitrary-precision integer support. BigInt is GMP's mpz_class; the
// algorithms below (extended Euclid, square-and-multiply, order reduction,
// trial division) are written against it directly.
//
// Factorization and primality are deterministic trial division, so every
// answer is exact. Inputs must be below 2^64 (trial divisors up to 2^32);
// larger inputs raise TooLarge.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace seqlab {

using BigInt = mpz_class;

struct EgcdResult {
  BigInt g;
  BigInt x;
  BigInt y;
};

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly increasing, exponents >= 1.
using Factorization = std::vector<PrimePower>;

inline constexpr unsigned kFactorBitLimit = 64;

// g = gcd(|a|, |b|) and a*x + b*y = g. Requires a, b not both zero.
EgcdResult egcd(const BigInt& a, const BigInt& b);

// Inverse of a modulo m in [0, m). Throws NonInvertible.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

// base^exp mod m in [0, m); negative exponents go through mod_inverse.
BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& m);
BigInt mod_pow(const BigInt& base, long exp, const BigInt& m);

Factorization factorize(const BigInt& n);
BigInt euler_phi(const BigInt& n);

// Least t >= 1 with a^t = 1 (mod m), found by stripping the prime factors of
// phi(m). Throws NotCoprime.
std::uint64_t multiplicative_order(const BigInt& a, const BigInt& m);

bool is_prime(const BigInt& n);

// ord_q(2) == phi(q), for odd q >= 3.
bool is_two_primitive(const BigInt& q);

// Euler's criterion; p must be an odd prime (NotOddPrime otherwise).
int legendre_symbol(const BigInt& a, const BigInt& p);

// (p, r) with q = p^r for an odd prime p, if any.
std::optional<PrimePower> odd_prime_power(const BigInt& q);

// Odd prime power with 2 as a primitive root: the moduli of l-sequences.
bool is_ell_modulus(const BigInt& q);

// Bit length of |n| (0 for n = 0).
std::size_t bit_length(const BigInt& n);

// Exact ceil(log2 n) for n >= 1.
std::size_t ceil_log2(const BigInt& n);

// floor(log2 n) for n >= 1.
std::size_t floor_log2(const BigInt& n);

// log2 n as a double, accurate for values far beyond double range.
double log2_of(const BigInt& n);

// 2^k.
BigInt pow2(std::size_t k);

std::uint64_t to_u64(const BigInt& n);
std::string to_string(const BigInt& n);

}  // namespace seqlab
