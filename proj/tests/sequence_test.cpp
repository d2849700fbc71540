#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "brute.hpp"
#include "seqlab/error.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {
namespace {

TEST(Word, BasicAccess) {
  Word w{0, 1, 1, 0, 1};
  EXPECT_EQ(w.size(), 5u);
  EXPECT_EQ(w.to_string(), "01101");
  EXPECT_TRUE(w[2]);
  EXPECT_THROW(w.at(5), Error);
  w.set(0, true);
  EXPECT_EQ(w.to_string(), "11101");
  EXPECT_EQ(w.count_ones(), 4u);
  EXPECT_TRUE(Word().empty());
  EXPECT_TRUE(Word().is_constant());
  EXPECT_TRUE(Word(130, true).is_constant());
}

TEST(Word, SliceAcrossLimbs) {
  std::mt19937_64 rng(7);
  const Word w = brute::random_word(rng, 300);
  for (std::size_t from : {0u, 1u, 63u, 64u, 65u, 130u}) {
    for (std::size_t len : {0u, 1u, 64u, 100u, 170u}) {
      const Word s = w.slice(from, len);
      ASSERT_EQ(s.size(), len);
      EXPECT_EQ(s.to_string(), w.to_string().substr(from, len));
    }
  }
  Word grown = w.prefix(70);
  grown.append(w.slice(70, 230));
  EXPECT_EQ(grown, w);
  std::string rev = w.to_string();
  std::reverse(rev.begin(), rev.end());
  EXPECT_EQ(w.reversed().to_string(), rev);
}

TEST(PrefixValue, Examples) {
  EXPECT_EQ(prefix_value(Word{0, 1, 0, 0, 1}), 18);
  EXPECT_EQ(prefix_value(Word{1, 1, 0, 0, 0}), 3);
  EXPECT_EQ(prefix_value(Word()), 0);
  Word big(100);
  big.set(99, true);
  EXPECT_EQ(prefix_value(big), pow2(99));
}

TEST(PrefixValue, InjectiveOnFixedLength) {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::set<std::string> seen;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      const BigInt v = prefix_value(brute::word_of_bits(b, n));
      EXPECT_EQ(v, BigInt(static_cast<unsigned long>(b)));
      EXPECT_TRUE(seen.insert(v.get_str()).second);
    }
  }
}

TEST(LeastPeriod, Examples) {
  auto s = least_period(Word{0, 1, 0, 1});
  EXPECT_EQ(s.period_word().to_string(), "01");
  EXPECT_EQ(s.period(), 2u);
  s = least_period(Word{1, 1, 0, 0, 0});
  EXPECT_EQ(s.period(), 5u);
  s = least_period(Word{1});
  EXPECT_EQ(s.period(), 1u);
  EXPECT_FALSE(PeriodicSequence(Word{0, 1, 0, 1}).least_period());
  EXPECT_THROW(PeriodicSequence{Word{}}, Error);
}

TEST(LeastPeriod, AgreesWithDivisorScan) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      const Word w = brute::word_of_bits(b, n);
      std::size_t expect = n;
      for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
        if (ok) {
          expect = d;
          break;
        }
      }
      ASSERT_EQ(least_period_length(w), expect) << w.to_string();
    }
  }
}

TEST(ReversePeriod, Examples) {
  EXPECT_EQ(reverse_period(PeriodicSequence(Word{1, 1, 0, 0, 0})).period_word().to_string(),
            "00011");
  EXPECT_EQ(reverse_period(PeriodicSequence(Word{1})).period_word().to_string(), "1");
  EXPECT_EQ(reverse_period(PeriodicSequence(Word{0, 1, 0, 0, 1})).period_word().to_string(),
            "10010");
}

TEST(ReversePeriod, Involution) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const PeriodicSequence s(brute::random_word(rng, 1 + rng() % 90));
    EXPECT_EQ(reverse_period(reverse_period(s)).period_word(), s.period_word());
  }
}

TEST(PeriodicSequence, UnrollAndShift) {
  const PeriodicSequence s(Word{1, 1, 0, 0, 0});
  EXPECT_EQ(s.unroll(12).to_string(), "110001100011");
  EXPECT_EQ(s.shifted(2).period_word().to_string(), "00011");
  EXPECT_EQ(s.unroll(0).size(), 0u);
}

TEST(BitIo, Parse) {
  EXPECT_EQ(parse_bits("01101").to_string(), "01101");
  EXPECT_EQ(parse_bits("01\n10").to_string(), "0110");
  EXPECT_EQ(parse_bits("").size(), 0u);
  try {
    parse_bits("012");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedBitFile);
    ASSERT_TRUE(e.position());
    EXPECT_EQ(*e.position(), 2u);
  }
}

TEST(BitIo, RoundTrip) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {0u, 1u, 63u, 64u, 65u, 1000u}) {
    const Word w = brute::random_word(rng, n);
    std::ostringstream os;
    write_bits(w, os);
    std::istringstream is(os.str());
    EXPECT_EQ(read_bits(is), w);
  }
}

TEST(Profile, AtIsOneBased) {
  Profile<std::size_t> p;
  p.push_back(0);
  p.push_back(2);
  p.push_back(2);
  EXPECT_EQ(p.at(1), 0u);
  EXPECT_EQ(p.at(3), 2u);
  EXPECT_TRUE(p.nondecreasing());
  p.push_back(1);
  EXPECT_FALSE(p.nondecreasing());
}

}  // namespace
}  // namespace seqlab
