#include <gtest/gtest.h>

#include <map>

#include "brute.hpp"
#include "seqlab/adic.hpp"
#include "seqlab/error.hpp"
#include "seqlab/generators.hpp"

namespace seqlab {
namespace {

TEST(Pattern, FirstBits) {
  EXPECT_EQ(pattern_word(1, 8).to_string(), "01101001");
  EXPECT_EQ(pattern_word(2, 8).to_string(), "00010010");
  EXPECT_FALSE(pattern_bit(3, 0));
  EXPECT_EQ(thue_morse_word(16), pattern_word(1, 16));
  EXPECT_EQ(rudin_shapiro_word(16), pattern_word(2, 16));
}

TEST(Pattern, IterativeMatchesRecursion) {
  for (unsigned k = 1; k <= 4; ++k) {
    std::map<std::uint64_t, bool> memo;
    for (std::uint64_t n = 0; n < (1u << 20); ++n) {
      ASSERT_EQ(pattern_bit(k, n), brute::pattern_recursive(k, n, memo))
          << "k=" << k << " n=" << n;
    }
  }
}

TEST(Pattern, BigIntOverload) {
  for (std::uint64_t n : {0ull, 7ull, 123456789ull, ~0ull}) {
    for (unsigned k = 1; k <= 5; ++k) {
      EXPECT_EQ(pattern_bit(k, BigInt(std::to_string(n))), pattern_bit(k, n));
    }
  }
  // 2^100 - 1 has 100 ones: 100 - k + 1 windows.
  const BigInt ones = pow2(100) - 1;
  EXPECT_FALSE(pattern_bit(1, ones));
  EXPECT_TRUE(pattern_bit(2, ones));
}

TEST(AlongPolynomial, ThueMorseSquares) {
  const auto tm = [](const BigInt& n) { return pattern_bit(1, n); };
  EXPECT_EQ(along_polynomial(tm, PolySpec({0, 0, 1}), 5).to_string(), "01101");
  EXPECT_EQ(along_polynomial(tm, PolySpec::identity(), 64), thue_morse_word(64));
  try {
    along_polynomial(tm, PolySpec({-1, 1}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeValue);
    ASSERT_TRUE(e.position());
    EXPECT_EQ(*e.position(), 0u);
  }
}

TEST(PolySpec, EvalAndRender) {
  const PolySpec f({0, 2, 0, 1});
  EXPECT_EQ(f(3), 33);
  EXPECT_EQ(f.eval_mod(3, 7), 5u);
  EXPECT_EQ(f.to_string(), "n^3+2*n");
  EXPECT_EQ(PolySpec({5}).degree(), 0u);
  EXPECT_EQ(PolySpec({-1, 0, 1}).to_string(), "n^2-1");
  EXPECT_EQ(PolySpec({0, 0, 0}).to_string(), "0");
}

TEST(Zeckendorf, Examples) {
  EXPECT_FALSE(zeckendorf_bit(0));
  EXPECT_TRUE(zeckendorf_bit(1));
  EXPECT_FALSE(zeckendorf_bit(4));
}

TEST(Zeckendorf, DigitsAreNonAdjacentAndReconstruct) {
  std::vector<BigInt> fib{1, 2};  // F_2, F_3, ...
  while (fib.size() < 120) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  for (unsigned long n = 0; n < 5000; ++n) {
    const auto d = zeckendorf_digits(n);
    BigInt sum = 0;
    std::size_t ones = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!d[i]) continue;
      ++ones;
      sum += fib[i];
      if (i + 1 < d.size()) EXPECT_FALSE(d[i + 1]) << n;
    }
    EXPECT_EQ(sum, n);
    EXPECT_EQ(zeckendorf_bit(n), ones % 2 == 1);
    EXPECT_EQ(zeckendorf_bit(BigInt(n)), ones % 2 == 1);
  }
  const BigInt big = fib[100] + fib[50] + fib[3];
  EXPECT_TRUE(zeckendorf_bit(big));
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre_word(5, PolySpec::identity(), 5).to_string(), "01001");
  EXPECT_EQ(legendre_word(3, PolySpec::identity(), 3).to_string(), "010");
  EXPECT_EQ(legendre_word(7, PolySpec({1}), 20), Word(20, true));
  EXPECT_EQ(legendre_period(11, PolySpec::identity()).period(), 11u);
  try {
    legendre_word(9, PolySpec::identity(), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOddPrime);
  }
  EXPECT_THROW(legendre_word(5, PolySpec({5, 10}), 3), Error);
}

TEST(Fcsr, WorkedExamples) {
  auto s = fcsr_word(3, 31);
  EXPECT_EQ(s.period_word().to_string(), "11000");
  EXPECT_EQ(s.period(), 5u);
  EXPECT_EQ(fcsr_word(5, 31).period_word().to_string(), "10100");
  s = fcsr_word(37, 127);
  EXPECT_EQ(s.period_word().to_string(), "1010010");
  s = fcsr_word(173, 255);
  EXPECT_EQ(s.period_word().to_string(), "10110101");
  for (std::uint64_t n = 0; n < 20; ++n) {
    EXPECT_EQ(fcsr_bit(173, 255, n), s.period_word()[n % 8]);
  }
}

TEST(Fcsr, Errors) {
  const auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  EXPECT_EQ(code([] { fcsr_word(3, 10); }), ErrorCode::EvenModulus);
  EXPECT_EQ(code([] { fcsr_word(3, 21); }), ErrorCode::NotCoprime);
  EXPECT_EQ(code([] { fcsr_word(0, 21); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(code([] { fcsr_word(31, 31); }), ErrorCode::InvalidParameter);
}

TEST(Fcsr, PeriodIsOrderAndConnectionRoundTrips) {
  for (unsigned long q = 3; q < 10000; q += 2) {
    const std::uint64_t t = multiplicative_order(2, q);
    for (unsigned long a : {1ul, 2ul, q / 3, q - 2, q - 1}) {
      if (a == 0 || a >= q || std::gcd(a, q) != 1) continue;
      const auto s = fcsr_word(a, q);
      ASSERT_EQ(s.period(), t) << a << "/" << q;
      ASSERT_TRUE(s.least_period() || t == 1);
      const auto rep = connection(s);
      // -A/q reduced: the connection integer divides q; with gcd(A, q) = 1
      // it is q itself and A comes back as the residue in [0, q).
      ASSERT_EQ(rep.q, q) << a << "/" << q;
      ASSERT_EQ(rep.A, a) << a << "/" << q;
    }
    if (q > 600) q += 40;  // thinner sample above 600
  }
}

TEST(Lfsr, Examples) {
  const LfsrSpec m4{4, {0, 1}, Word{1, 0, 0, 0}};
  const auto s = lfsr_period(m4);
  EXPECT_EQ(s.period(), 15u);
  EXPECT_EQ(s.period_word().to_string(), "100010011010111");
  EXPECT_EQ(lfsr_word(m4, 30), s.unroll(30));
  EXPECT_EQ(lfsr_word(LfsrSpec{1, {0}, Word{1}}, 10), Word(10, true));
  try {
    lfsr_word(LfsrSpec{3, {0}, Word{0, 0, 0}}, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroSeed);
  }
}

}  // namespace
}  // namespace seqlab
