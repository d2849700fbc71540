#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "brute.hpp"
#include "seqlab/adic.hpp"
#include "seqlab/error.hpp"
#include "seqlab/generators.hpp"
#include "seqlab/relations.hpp"

namespace seqlab {
namespace {

std::string evidence(const VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.evidence) {
    if (k == key) return v;
  }
  return "<missing " + key + ">";
}

TEST(Thm1, Fixtures) {
  EXPECT_TRUE(verify_thm1(thue_morse_word(256), "tm").passed());
  EXPECT_TRUE(verify_thm1(Word(64), "zero").passed());
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    EXPECT_TRUE(verify_thm1(brute::random_word(rng, 128), "random").passed());
  }
}

TEST(Thm2, Examples) {
  const auto r = verify_thm2(fcsr_word(1, 19));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(evidence(r, "M"), "5");
  EXPECT_EQ(evidence(r, "ceil_log2_q"), "5");
  EXPECT_TRUE(verify_thm2(PeriodicSequence(Word{1})).passed());
  const auto ex = verify_thm2_exhaustive(10);
  EXPECT_TRUE(ex.passed());
  // 2 + 2 + 6 + 12 + 30 + 54 + 126 + 240 + 504 + 990 primitive words.
  EXPECT_EQ(evidence(ex, "sequences"), "1966");
}

TEST(Lemma1, Examples) {
  const auto r = verify_lemma1(PeriodicSequence(Word{0, 1, 0, 0, 1}));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(evidence(r, "mu(2T)"), "22");
  EXPECT_EQ(evidence(r, "gap"), "mu(2T) < q");
  EXPECT_EQ(evidence(r, "mu(11)"), "31");
  EXPECT_TRUE(verify_lemma1(PeriodicSequence(Word{1})).passed());
  EXPECT_TRUE(verify_lemma1_exhaustive(8).passed());
}

TEST(Cor1, Fixtures) {
  EXPECT_TRUE(verify_cor1(legendre_word(101, PolySpec::identity(), 101), "L101").passed());
  const auto c = verify_cor1(Word(40, true), "ones");
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(evidence(c, "C2"), "39");
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    EXPECT_TRUE(verify_cor1(brute::random_word(rng, 128), "random").passed());
  }
}

TEST(Thm4, Examples) {
  auto r = verify_thm4(63);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(evidence(r, "M_values"), "{3 4 5}");
  r = verify_thm4(31);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(evidence(r, "M_values"), "{3 4}");
  r = verify_thm4(217);
  EXPECT_EQ(evidence(r, "M_values"), "{5 6 7 8}");
  EXPECT_THROW(verify_thm4(1001), Error);
  EXPECT_THROW(verify_thm4(64), Error);
  EXPECT_TRUE(verify_thm4_range(200).passed());
}

TEST(Thm5, Examples) {
  auto r = verify_thm5(5);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(evidence(r, "M"), "2");
  r = verify_thm5(361);
  EXPECT_EQ(evidence(r, "M"), "9");
  EXPECT_TRUE(verify_thm5_range(3000).passed());
  EXPECT_THROW(verify_thm5(17), Error);
}

TEST(Lemma3, Scan) {
  const auto r = lemma3_scan(30);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(evidence(r, "l_moduli"), "{3 5 9}");
  EXPECT_EQ(lemma3_moduli(30), (std::vector<BigInt>{3, 5, 9}));
  EXPECT_EQ(lemma3_moduli(2), (std::vector<BigInt>{3, 5}));
}

TEST(Thm6, Examples) {
  EXPECT_TRUE(verify_thm6(2).passed());
  EXPECT_TRUE(verify_thm6(5).passed());
  const auto r8 = verify_thm6(8);
  EXPECT_TRUE(r8.passed());
  EXPECT_EQ(evidence(r8, "example_M"), "6");
  EXPECT_EQ(evidence(r8, "example_q"), "85");
  EXPECT_EQ(connection(PeriodicSequence(Word{1, 0, 1, 0, 0})).q, 31);
  EXPECT_EQ(connection(PeriodicSequence(Word::from_string("10110101"))).q, 255);
  EXPECT_TRUE(verify_thm6_exhaustive(12).passed());
}

TEST(MSequence, Fixtures) {
  auto r = verify_msequence(LfsrSpec{4, {0, 1}, Word{1, 0, 0, 0}});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(evidence(r, "L"), "4");
  EXPECT_EQ(evidence(r, "q"), "32767");
  r = verify_msequence(LfsrSpec{5, {0, 2}, Word{1, 0, 0, 0, 0}});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(evidence(r, "q"), "2147483647");
  r = verify_msequence(LfsrSpec{1, {0}, Word{1}});
  EXPECT_EQ(r.status, Status::Skipped);
  // x^4 + x^2 + 1 is not primitive: the verifier must say so.
  r = verify_msequence(LfsrSpec{4, {0, 2}, Word{1, 0, 0, 0}});
  EXPECT_FALSE(r.passed());
}

TEST(LowerBound, PatternSequences) {
  EXPECT_TRUE(verify_pattern_lower_bound(1, 600).passed());
  EXPECT_TRUE(verify_pattern_lower_bound(2, 600).passed());
  EXPECT_TRUE(verify_pattern_lower_bound(3, 300).passed());
}

TEST(CrossMeasures, Fixtures) {
  EXPECT_TRUE(verify_cross_measures(thue_morse_word(100), "tm", {50, 100}).passed());
  const auto r = verify_cross_measures(fcsr_word(1, 11).unroll(20), "ell11", {20});
  EXPECT_EQ(evidence(r, "L"), "6");
  EXPECT_THROW(verify_cross_measures(Word(5), "z", {6}), Error);
}

TEST(Tables, Reference) {
  const auto t1 = reproduce_table(1);
  ASSERT_EQ(t1.rows.size(), 8u);
  EXPECT_TRUE(t1.all_match());
  const auto& q625 = t1.rows[4].computed;
  EXPECT_EQ(q625.q, 625);
  EXPECT_EQ(q625.period, 500u);
  EXPECT_EQ(q625.ceil_log2, 10u);
  EXPECT_EQ(q625.m_values, std::vector<std::size_t>{10});
  EXPECT_TRUE(t1.rows[0].computed.floor_remark);
  const auto t2 = reproduce_table(2);
  ASSERT_EQ(t2.rows.size(), 5u);
  EXPECT_TRUE(t2.all_match());
  EXPECT_EQ(t2.rows[3].computed.m_values, (std::vector<std::size_t>{4, 5, 6}));
}

TEST(Tables, MutatedExpectationIsReported) {
  auto rows = reference_table(1);
  rows[2].m_values = {4};
  const auto t = reproduce_table(1, rows);
  EXPECT_FALSE(t.all_match());
  EXPECT_FALSE(t.rows[2].match);
  const auto reports = to_reports(t);
  EXPECT_FALSE(reports[2].passed());
  EXPECT_EQ(evidence(reports[2], "counterexample"), "expected T=18 ceil=5 M={4}");

  auto rows2 = reference_table(2);
  rows2[0].m_values = {4};
  EXPECT_FALSE(reproduce_table(2, rows2).all_match());
  rows2 = reference_table(2);
  rows2[1].period = 7;
  EXPECT_FALSE(reproduce_table(2, rows2).all_match());
  EXPECT_THROW(reproduce_table(3), Error);
}

// Fail paths of the verifiers, driven by inputs where the checked
// relation does not hold.
TEST(Verifiers, FailPaths) {
  VerificationReport r{"x", "y"};
  r.fail("first");
  r.fail("second");
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(evidence(r, "counterexample"), "first");
  // A non-primitive LFSR breaks the m-sequence claim (above); thm4 with a
  // too-small q limit and lemma1 above its bound raise rather than pass.
  EXPECT_THROW(verify_thm4(999, 500), Error);
  Word long_period(kLemma1MaxPeriod + 1);
  long_period.set(kLemma1MaxPeriod, true);
  EXPECT_THROW(verify_lemma1(PeriodicSequence(long_period)), Error);
}

TEST(Scan, Grid) {
  const auto g = scan_grid(5000, 1.3);
  EXPECT_EQ(g.front(), 2u);
  EXPECT_EQ(g[62], 64u);
  EXPECT_EQ(g[63], 84u);
  EXPECT_EQ(g.back(), 5000u);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(g[i - 1], g[i]);
  EXPECT_EQ(scan_grid(10, 1.3), (std::vector<std::size_t>{2, 3, 4, 5, 6, 7, 8, 9, 10}));
  EXPECT_TRUE(scan_grid(1, 1.3).empty());
  EXPECT_THROW(scan_grid(100, 1.0), Error);
}

TEST(Scan, ThueMorseWithinAndZeroOutside) {
  ScanOptions o;
  o.n_max = 2000;
  const auto tm = conjecture_scan(thue_morse_word(2000), "tm", o);
  EXPECT_TRUE(tm.within_everywhere());
  EXPECT_EQ(tm.summary().grade, Grade::Report);
  const auto zero = conjecture_scan(Word(2000), "zero", o);
  EXPECT_FALSE(zero.within_everywhere());
  EXPECT_EQ(zero.summary().status, Status::Fail);
  EXPECT_EQ(zero.summary().grade, Grade::Report);
}

TEST(Scan, CapFlattensTarget) {
  ScanOptions o;
  o.n_max = 300;
  o.cap_log2 = 20.0;
  const auto s = conjecture_scan(legendre_word(101, PolySpec::identity(), 300), "L", o);
  for (const auto& row : s.rows) {
    EXPECT_EQ(row.target, std::min(row.half_n, 20.0));
    EXPECT_EQ(row.mu, adic_min(legendre_word(101, PolySpec::identity(), row.n), row.n).mu);
  }
}

TEST(Output, FormattingAndDeterminism) {
  EXPECT_EQ(format_real(4.954196310386876), "4.954196");
  EXPECT_EQ(format_real(-0.0000001), "0.000000");
  std::vector<VerificationReport> reports{verify_thm5(19), verify_thm4(63)};
  reports.push_back(verify_msequence(LfsrSpec{1, {0}, Word{1}}));
  std::ostringstream a, b, c, d;
  write_reports_csv(reports, a);
  write_reports_csv(reports, b);
  write_reports_json(reports, c);
  write_reports_json(reports, d);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(c.str(), d.str());
  EXPECT_EQ(a.str().substr(0, 2), "# ");
  EXPECT_NE(a.str().find("thm4,q=63,assert,pass,T=6;A_checked=36;cosets=6;M_values={3 4 5}"),
            std::string::npos);
  EXPECT_NE(c.str().find("\"claim_id\": \"thm5\""), std::string::npos);
  EXPECT_NE(a.str().find("skipped,reason="), std::string::npos);
}

}  // namespace
}  // namespace seqlab
