#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "seqlab/bounds.hpp"
#include "seqlab/error.hpp"
#include "seqlab/generators.hpp"
#include "seqlab/maxorder.hpp"

namespace seqlab {
namespace {

void expect_valid_witness(const Word& w, const MocResult& r) {
  if (r.m == 0) {
    EXPECT_TRUE(w.is_constant());
    return;
  }
  ASSERT_TRUE(r.witness);
  const auto& x = *r.witness;
  EXPECT_EQ(x.length + 1, r.m);
  ASSERT_LT(x.i, x.j);
  ASSERT_LT(x.j + x.length, w.size());
  EXPECT_EQ(w.slice(x.i, x.length), w.slice(x.j, x.length));
  EXPECT_NE(w[x.i + x.length], w[x.j + x.length]);
}

TEST(Moc, Examples) {
  EXPECT_EQ(moc(Word::from_string("110001100")).m, 3u);
  EXPECT_EQ(moc(Word::from_string("0000")).m, 0u);
  EXPECT_EQ(moc(Word::from_string("0001")).m, 3u);
  EXPECT_EQ(moc(Word::from_string("101001010")).m, 4u);
  EXPECT_EQ(moc(Word()).m, 0u);
  EXPECT_EQ(moc(Word{1}).m, 0u);
  EXPECT_EQ(moc(Word{0, 1}).m, 1u);
}

TEST(MocOracle, Examples) {
  EXPECT_EQ(moc_oracle(Word{0, 1}).m, 1u);
  EXPECT_EQ(moc_oracle(Word::from_string("110001100")).m, 3u);
  try {
    moc_oracle(Word(3000), 2000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OracleBoundExceeded);
  }
}

TEST(Moc, OracleIsTheDefinition) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Word w = brute::random_word(rng, rng() % 40);
    EXPECT_EQ(moc_oracle(w).m, brute::moc(w)) << w.to_string();
  }
}

TEST(Moc, ExhaustiveUpToTwelve) {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      const Word w = brute::word_of_bits(b, n);
      const auto r = moc(w);
      ASSERT_EQ(r.m, moc_oracle(w).m) << w.to_string();
      expect_valid_witness(w, r);
    }
  }
}

TEST(Moc, RandomLongWords) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    // Low-entropy words push M up; plain random words keep it near log N.
    Word w = brute::random_word(rng, 1 + rng() % 500);
    if (i % 2) {
      for (std::size_t j = 0; j < w.size(); ++j) w.set(j, w[j] && (rng() % 4 == 0));
    }
    const auto r = moc(w);
    ASSERT_EQ(r.m, moc_oracle(w).m) << w.to_string();
    expect_valid_witness(w, r);
  }
}

TEST(MocProfile, MatchesPrefixesAndIsMonotone) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Word w = brute::random_word(rng, 1 + rng() % 120);
    const auto p = moc_profile(w);
    ASSERT_EQ(p.size(), w.size());
    EXPECT_TRUE(p.nondecreasing());
    for (std::size_t n = 1; n <= w.size(); ++n) {
      ASSERT_EQ(p.at(n), moc(w.prefix(n)).m) << w.to_string() << " N=" << n;
    }
  }
  const auto tm = moc_profile(thue_morse_word(512));
  for (std::size_t n = 1; n <= 512; n += 37) EXPECT_EQ(tm.at(n), moc(thue_morse_word(n)).m);
}

TEST(MocPeriodic, Examples) {
  EXPECT_EQ(moc_periodic(fcsr_word(37, 127)), 6u);
  EXPECT_EQ(moc_periodic(fcsr_word(173, 255)), 7u);
  EXPECT_EQ(moc_periodic(fcsr_word(3, 31)), 3u);
  EXPECT_EQ(moc_periodic(fcsr_word(5, 31)), 4u);
  for (unsigned long a = 1; a < 19; ++a) EXPECT_EQ(moc_periodic(fcsr_word(a, 19)), 5u);
  EXPECT_EQ(moc_periodic(PeriodicSequence(Word{1})), 0u);
  // Non-least period input is normalised first.
  EXPECT_EQ(moc_periodic(PeriodicSequence(Word::from_string("1100011000"))), 3u);
}

TEST(MocPeriodic, ShiftReversalAndRange) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const PeriodicSequence s = least_period(brute::random_word(rng, 1 + rng() % 40));
    const std::size_t m = moc_periodic(s);
    const std::size_t t = s.period();
    EXPECT_EQ(moc_periodic(s.shifted(rng() % t)), m);
    EXPECT_EQ(moc_periodic(reverse_period(s)), m);
    if (t >= 2) {
      EXPECT_GE(m, ceil_log2(t));
      EXPECT_LE(m, t - 1);
    }
  }
}

TEST(Coset, Examples) {
  const auto d = coset(3, 31);
  ASSERT_EQ(d.size(), 5u);
  EXPECT_EQ(d, (std::vector<BigInt>{3, 6, 12, 17, 24}));
  EXPECT_EQ(moc_from_coset(3, 31), 3u);
  EXPECT_EQ(moc_from_coset(11, 63), 3u);
  EXPECT_EQ(moc_from_coset(1, 63), 5u);
  EXPECT_EQ(coset(1, 63).size(), 6u);
}

TEST(Coset, CharacterisationForAllOddModuliUpTo300) {
  for (unsigned long q = 3; q <= 300; q += 2) {
    for (unsigned long a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      ASSERT_EQ(moc_from_coset(a, q), moc_periodic(fcsr_word(a, q))) << a << "/" << q;
    }
  }
}

TEST(Coset, BigModulusFallback) {
  // q above 2^64 exercises the arbitrary-precision path.
  const BigInt q = pow2(67) - 1;  // ord_q(2) = 67
  const BigInt a = 12345;
  EXPECT_EQ(moc_from_coset(a, q), moc_periodic(fcsr_word(a, q)));
}

TEST(EllFormula, Examples) {
  EXPECT_EQ(moc_ell_formula(9), 3u);
  EXPECT_EQ(moc_ell_formula(27), 5u);
  EXPECT_EQ(moc_ell_formula(6859), 13u);
  EXPECT_EQ(moc_ell_formula(3), 1u);
  EXPECT_EQ(moc_ell_formula(5), 2u);
  try {
    moc_ell_formula(17);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotEllModulus);
  }
}

TEST(EllFormula, AgreesWithComputationUpTo1000) {
  for (unsigned long q = 3; q <= 1000; q += 2) {
    if (!is_ell_modulus(q)) continue;
    EXPECT_EQ(moc_ell_formula(q), moc_periodic(fcsr_word(1, q))) << q;
  }
}

TEST(OracleBounds, Parse) {
  const auto b = parse_oracle_bounds("moc=5000,adic=22");
  EXPECT_EQ(b.moc, 5000u);
  EXPECT_EQ(b.adic, 22u);
  EXPECT_EQ(b.corr, OracleBounds{}.corr);
  EXPECT_EQ(parse_oracle_bounds("").moc, OracleBounds{}.moc);
  EXPECT_THROW(parse_oracle_bounds("moc"), Error);
  EXPECT_THROW(parse_oracle_bounds("speed=3"), Error);
  EXPECT_THROW(parse_oracle_bounds("adic=x"), Error);
}

}  // namespace
}  // namespace seqlab
