#include "seqlab/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "seqlab/error.hpp"

namespace seqlab {

PolySpec::PolySpec(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

BigInt PolySpec::operator()(const BigInt& n) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * n + *it;
  }
  return acc;
}

std::uint64_t PolySpec::eval_mod(std::uint64_t n, std::uint64_t m) const {
  const BigInt mod(static_cast<unsigned long>(m));
  const BigInt x(static_cast<unsigned long>(n % m));
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = (acc * x + *it) % mod;
  }
  if (acc < 0) acc += mod;
  return to_u64(acc);
}

std::string PolySpec::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0 && !(i == 0 && first)) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? '-' : '+');
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << 'n';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

bool pattern_bit(unsigned k, std::uint64_t n) {
  if (k == 0) throw Error(ErrorCode::InvalidParameter, "pattern length k >= 1");
  unsigned run = 0;
  bool parity = false;
  for (; n != 0; n >>= 1) {
    if (n & 1u) {
      if (++run >= k) parity = !parity;
    } else {
      run = 0;
    }
  }
  return parity;
}

bool pattern_bit(unsigned k, const BigInt& n) {
  if (n < 0) throw Error(ErrorCode::NegativeValue, "pattern index < 0");
  if (bit_length(n) <= 64) return pattern_bit(k, to_u64(n));
  if (k == 0) throw Error(ErrorCode::InvalidParameter, "pattern length k >= 1");
  unsigned run = 0;
  bool parity = false;
  const std::size_t bits = bit_length(n);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(n.get_mpz_t(), i)) {
      if (++run >= k) parity = !parity;
    } else {
      run = 0;
    }
  }
  return parity;
}

Word pattern_word(unsigned k, std::size_t n) {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w.set(i, pattern_bit(k, std::uint64_t{i}));
  return w;
}

Word along_polynomial(const BitGenerator& base, const PolySpec& f,
                      std::size_t n) {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt value = f(BigInt(static_cast<unsigned long>(i)));
    if (value < 0) {
      throw Error(ErrorCode::NegativeValue,
                  "f(" + std::to_string(i) + ") = " + value.get_str() + " < 0",
                  i);
    }
    w.set(i, base(value));
  }
  return w;
}

namespace {

// F_2 .. F_93, the Fibonacci numbers below 2^64 (F_2 = 1, F_3 = 2, ...).
const std::vector<std::uint64_t>& fibonacci_u64() {
  static const std::vector<std::uint64_t> fib = [] {
    std::vector<std::uint64_t> f{1, 2};
    while (f.back() <= UINT64_MAX - f[f.size() - 2]) {
      f.push_back(f.back() + f[f.size() - 2]);
    }
    return f;
  }();
  return fib;
}

}  // namespace

std::vector<bool> zeckendorf_digits(const BigInt& n) {
  if (n < 0) throw Error(ErrorCode::NegativeValue, "Zeckendorf of n < 0");
  std::vector<BigInt> fib{1, 2};
  while (fib.back() <= n) fib.push_back(fib.back() + fib[fib.size() - 2]);
  std::vector<bool> digits(fib.size(), false);
  BigInt rest = n;
  for (std::size_t i = fib.size(); i-- > 0;) {
    if (fib[i] <= rest) {
      digits[i] = true;
      rest -= fib[i];
    }
  }
  while (!digits.empty() && !digits.back()) digits.pop_back();
  return digits;
}

bool zeckendorf_bit(std::uint64_t n) {
  const auto& fib = fibonacci_u64();
  bool parity = false;
  for (std::size_t i = fib.size(); i-- > 0 && n != 0;) {
    if (fib[i] <= n) {
      n -= fib[i];
      parity = !parity;
    }
  }
  return parity;
}

bool zeckendorf_bit(const BigInt& n) {
  if (n >= 0 && bit_length(n) <= 64) return zeckendorf_bit(to_u64(n));
  const auto digits = zeckendorf_digits(n);
  return std::count(digits.begin(), digits.end(), true) % 2 == 1;
}

Word zeckendorf_word(std::size_t n) {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w.set(i, zeckendorf_bit(std::uint64_t{i}));
  return w;
}

namespace {

// Bit per residue class r mod p: 1 iff (f(r)/p) = +1.
std::vector<bool> legendre_table(const BigInt& p, const PolySpec& f) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p)) {
    throw Error(ErrorCode::NotOddPrime, p.get_str() + " is not an odd prime");
  }
  const std::uint64_t pp = to_u64(p);
  bool nonzero = false;
  for (const auto& c : f.coefficients()) {
    if (c % p != 0) nonzero = true;
  }
  if (!nonzero) {
    throw Error(ErrorCode::InvalidParameter,
                "polynomial vanishes identically modulo " + p.get_str());
  }
  // Symbol of every residue once, then index by f(r) mod p.
  std::vector<bool> residue(pp, false);
  for (std::uint64_t a = 1; a < pp; ++a) {
    residue[a] = legendre_symbol(BigInt(static_cast<unsigned long>(a)), p) == 1;
  }
  std::vector<bool> table(pp);
  for (std::uint64_t r = 0; r < pp; ++r) table[r] = residue[f.eval_mod(r, pp)];
  return table;
}

}  // namespace

Word legendre_word(const BigInt& p, const PolySpec& f, std::size_t n) {
  const auto table = legendre_table(p, f);
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w.set(i, table[i % table.size()]);
  return w;
}

PeriodicSequence legendre_period(const BigInt& p, const PolySpec& f) {
  return least_period(legendre_word(p, f, to_u64(p)));
}

namespace {

void check_fcsr(const BigInt& A, const BigInt& q) {
  if (mpz_even_p(q.get_mpz_t())) {
    throw Error(ErrorCode::EvenModulus, "q = " + q.get_str() + " is even");
  }
  if (q < 3) {
    throw Error(ErrorCode::InvalidParameter, "q must be >= 3");
  }
  if (A <= 0 || A >= q) {
    throw Error(ErrorCode::InvalidParameter,
                "A = " + A.get_str() + " must lie in (0, q)");
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), q.get_mpz_t());
  if (g != 1) {
    throw Error(ErrorCode::NotCoprime,
                "gcd(" + A.get_str() + ", " + q.get_str() + ") != 1");
  }
}

}  // namespace

bool fcsr_bit(const BigInt& A, const BigInt& q, std::uint64_t n) {
  check_fcsr(A, q);
  const BigInt r =
      (A * mod_pow(2, -BigInt(static_cast<unsigned long>(n)), q)) % q;
  return mpz_odd_p(r.get_mpz_t()) != 0;
}

PeriodicSequence fcsr_word(const BigInt& A, const BigInt& q) {
  check_fcsr(A, q);
  Word period;
  // Halving modulo q multiplies by 2^-1; the state returns to A after
  // ord_q(2) steps.
  if (bit_length(q) < 63) {
    const std::uint64_t m = to_u64(q);
    const std::uint64_t start = to_u64(A);
    std::uint64_t a = start;
    do {
      period.push_back(a & 1u);
      a = (a & 1u) ? (a + m) / 2 : a / 2;
    } while (a != start);
  } else {
    BigInt a = A;
    do {
      const bool odd = mpz_odd_p(a.get_mpz_t()) != 0;
      period.push_back(odd);
      if (odd) a += q;
      mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), 1);
    } while (a != A);
  }
  return PeriodicSequence(std::move(period));
}

namespace {

void check_lfsr(const LfsrSpec& spec) {
  if (spec.degree == 0) {
    throw Error(ErrorCode::InvalidParameter, "LFSR degree must be >= 1");
  }
  if (spec.seed.size() != spec.degree) {
    throw Error(ErrorCode::InvalidParameter, "seed length must equal degree");
  }
  for (unsigned t : spec.taps) {
    if (t >= spec.degree) {
      throw Error(ErrorCode::InvalidParameter,
                  "tap " + std::to_string(t) + " outside [0, degree)");
    }
  }
  if (spec.seed.count_ones() == 0) {
    throw Error(ErrorCode::ZeroSeed, "LFSR seed is all zero");
  }
}

}  // namespace

Word lfsr_word(const LfsrSpec& spec, std::size_t n) {
  check_lfsr(spec);
  Word w;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < spec.degree) {
      w.push_back(spec.seed[i]);
      continue;
    }
    bool next = false;
    for (unsigned t : spec.taps) next ^= w[i - spec.degree + t];
    w.push_back(next);
  }
  return w;
}

PeriodicSequence lfsr_period(const LfsrSpec& spec) {
  check_lfsr(spec);
  if (spec.degree > 32) {
    throw Error(ErrorCode::TooLarge, "periodic LFSR degree must be <= 32");
  }
  if (std::find(spec.taps.begin(), spec.taps.end(), 0u) == spec.taps.end()) {
    throw Error(ErrorCode::InvalidParameter,
                "periodic LFSR needs tap 0 (invertible recurrence)");
  }
  // State bit i holds s_{n+i}.
  std::uint64_t tap_mask = 0;
  for (unsigned t : spec.taps) tap_mask ^= std::uint64_t{1} << t;
  std::uint64_t start = 0;
  for (unsigned i = 0; i < spec.degree; ++i) {
    if (spec.seed[i]) start |= std::uint64_t{1} << i;
  }
  Word period;
  std::uint64_t state = start;
  do {
    period.push_back(state & 1u);
    const std::uint64_t fb = std::popcount(state & tap_mask) & 1u;
    state = (state >> 1) | (fb << (spec.degree - 1));
  } while (state != start);
  return least_period(period);
}

}  // namespace seqlab
