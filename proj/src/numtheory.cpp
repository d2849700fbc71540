#include "seqlab/numtheory.hpp"

#include <cmath>
#include <utility>

#include "seqlab/error.hpp"

namespace seqlab {

EgcdResult egcd(const BigInt& a, const BigInt& b) {
  if (a == 0 && b == 0) {
    throw Error(ErrorCode::InvalidParameter, "egcd(0, 0) is undefined");
  }
  // Invariants: r0 = a*s0 + b*t0, r1 = a*s1 + b*t1.
  BigInt r0 = a, r1 = b;
  BigInt s0 = 1, s1 = 0;
  BigInt t0 = 0, t1 = 1;
  BigInt quot, tmp;
  while (r1 != 0) {
    mpz_tdiv_q(quot.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - quot * r1;
    r0 = std::move(r1);
    r1 = std::move(tmp);
    tmp = s0 - quot * s1;
    s0 = std::move(s1);
    s1 = std::move(tmp);
    tmp = t0 - quot * t1;
    t0 = std::move(t1);
    t1 = std::move(tmp);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, s0, t0};
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  if (m <= 1) {
    throw Error(ErrorCode::InvalidParameter, "modulus must exceed 1");
  }
  const BigInt reduced = ((a % m) + m) % m;
  if (reduced == 0) {
    throw Error(ErrorCode::NonInvertible,
                to_string(a) + " is not invertible modulo " + to_string(m));
  }
  const auto [g, x, y] = egcd(reduced, m);
  if (g != 1) {
    throw Error(ErrorCode::NonInvertible,
                to_string(a) + " is not invertible modulo " + to_string(m));
  }
  return ((x % m) + m) % m;
}

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& m) {
  if (m <= 1) {
    throw Error(ErrorCode::InvalidParameter, "modulus must exceed 1");
  }
  BigInt b = exp < 0 ? mod_inverse(base, m) : BigInt(((base % m) + m) % m);
  BigInt e = abs(exp);
  BigInt result = 1;
  const std::size_t bits = bit_length(e);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

BigInt mod_pow(const BigInt& base, long exp, const BigInt& m) {
  return mod_pow(base, BigInt(exp), m);
}

namespace {

void require_u64(const BigInt& n, const char* what) {
  if (n < 0 || bit_length(n) > kFactorBitLimit) {
    throw Error(ErrorCode::TooLarge,
                std::string(what) + " input " + to_string(n) +
                    " exceeds the 64-bit trial-division bound");
  }
}

Factorization factorize_u64(std::uint64_t n) {
  Factorization out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  for (std::uint64_t d = 3; d <= n / d; d += 2) strip(d);
  if (n > 1) out.push_back({n, 1});
  return out;
}

}  // namespace

Factorization factorize(const BigInt& n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "factorize needs n >= 1");
  require_u64(n, "factorize");
  return factorize_u64(to_u64(n));
}

BigInt euler_phi(const BigInt& n) {
  BigInt phi = 1;
  for (const auto& [p, e] : factorize(n)) {
    BigInt pp = BigInt(static_cast<unsigned long>(p));
    BigInt term = pp - 1;
    for (unsigned i = 1; i < e; ++i) term *= pp;
    phi *= term;
  }
  return phi;
}

std::uint64_t multiplicative_order(const BigInt& a, const BigInt& m) {
  if (m <= 1) throw Error(ErrorCode::InvalidParameter, "modulus must exceed 1");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (g != 1) {
    throw Error(ErrorCode::NotCoprime,
                to_string(a) + " and " + to_string(m) + " are not coprime");
  }
  const BigInt phi = euler_phi(m);
  std::uint64_t order = to_u64(phi);
  for (const auto& [p, e] : factorize(phi)) {
    for (unsigned i = 0; i < e; ++i) {
      const std::uint64_t candidate = order / p;
      if (mod_pow(a, BigInt(static_cast<unsigned long>(candidate)), m) != 1) {
        break;
      }
      order = candidate;
    }
  }
  return order;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  require_u64(n, "is_prime");
  const auto f = factorize_u64(to_u64(n));
  return f.size() == 1 && f.front().exponent == 1;
}

bool is_two_primitive(const BigInt& q) {
  if (q < 3 || mpz_even_p(q.get_mpz_t())) {
    throw Error(ErrorCode::InvalidParameter,
                "is_two_primitive needs odd q >= 3, got " + to_string(q));
  }
  return BigInt(static_cast<unsigned long>(multiplicative_order(2, q))) ==
         euler_phi(q);
}

int legendre_symbol(const BigInt& a, const BigInt& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p)) {
    throw Error(ErrorCode::NotOddPrime, to_string(p) + " is not an odd prime");
  }
  const BigInt r = ((a % p) + p) % p;
  if (r == 0) return 0;
  const BigInt e = mod_pow(r, BigInt((p - 1) / 2), p);
  return e == 1 ? 1 : -1;
}

std::optional<PrimePower> odd_prime_power(const BigInt& q) {
  if (q < 3 || mpz_even_p(q.get_mpz_t())) return std::nullopt;
  const auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

bool is_ell_modulus(const BigInt& q) {
  return odd_prime_power(q).has_value() && is_two_primitive(q);
}

std::size_t bit_length(const BigInt& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

std::size_t ceil_log2(const BigInt& n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "ceil_log2 needs n >= 1");
  const std::size_t bits = bit_length(n);
  // Exact powers of two have a single set bit.
  return mpz_popcount(n.get_mpz_t()) == 1 ? bits - 1 : bits;
}

std::size_t floor_log2(const BigInt& n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "floor_log2 needs n >= 1");
  return bit_length(n) - 1;
}

double log2_of(const BigInt& n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "log2 needs n >= 1");
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return static_cast<double>(exp) + std::log2(mantissa);
}

BigInt pow2(std::size_t k) {
  BigInt r;
  mpz_setbit(r.get_mpz_t(), k);
  return r;
}

std::uint64_t to_u64(const BigInt& n) {
  if (n < 0 || bit_length(n) > 64) {
    throw Error(ErrorCode::TooLarge, to_string(n) + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, n.get_mpz_t());
  return out;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

}  // namespace seqlab
