#include "seqlab/relations.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "seqlab/adic.hpp"
#include "seqlab/error.hpp"
#include "seqlab/maxorder.hpp"
#include "seqlab/measures.hpp"

namespace seqlab {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

std::string_view to_string(Grade g) noexcept {
  return g == Grade::Assert ? "assert" : "report";
}

namespace {

std::string join_sizes(const std::vector<std::size_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out + "}";
}

// Calls fn(word) for every word of least period exactly t.
template <class Fn>
void for_each_primitive_period(std::size_t t, Fn&& fn) {
  if (t == 0 || t > 24) {
    throw Error(ErrorCode::TooLarge, "exhaustive period scans need 1 <= T <= 24");
  }
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits) {
    Word w(t);
    for (std::size_t i = 0; i < t; ++i) w.set(i, (bits >> i) & 1u);
    if (least_period_length(w) == t) fn(PeriodicSequence(w));
  }
}

}  // namespace

VerificationReport verify_thm1(const Word& w, const std::string& instance) {
  VerificationReport r{"thm1", instance};
  const auto m = moc_profile(w);
  const auto mu = adic_profile(w);
  std::size_t tightest = 0;
  bool tight_set = false;
  for (std::size_t n = 1; n <= w.size(); ++n) {
    const std::size_t bound = ceil_log2(mu.at(n)) + 1;
    if (m.at(n) > bound) {
      r.fail("N=" + std::to_string(n) + " M=" + std::to_string(m.at(n)) +
             " mu=" + mu.at(n).get_str());
      break;
    }
    const std::size_t slack = bound - m.at(n);
    if (!tight_set || slack < tightest) {
      tightest = slack;
      tight_set = true;
    }
  }
  r.add("N_max", w.size());
  if (!w.empty()) {
    r.add("M", m.back());
    r.add("mu", mu.back());
    r.add("min_slack", tightest);
  }
  return r;
}

VerificationReport verify_thm2(const PeriodicSequence& s) {
  VerificationReport r{"thm2", "period=" + s.period_word().to_string()};
  const std::size_t m = moc_periodic(s);
  const BigInt q = connection(s).q;
  const std::size_t bound = ceil_log2(q);
  r.add("M", m);
  r.add("q", q);
  r.add("ceil_log2_q", bound);
  if (m > bound) r.fail(r.instance);
  return r;
}

VerificationReport verify_thm2_exhaustive(std::size_t t_max) {
  VerificationReport r{"thm2", "exhaustive T<=" + std::to_string(t_max)};
  std::size_t checked = 0;
  for (std::size_t t = 1; t <= t_max && r.passed(); ++t) {
    for_each_primitive_period(t, [&](const PeriodicSequence& s) {
      if (!r.passed()) return;
      ++checked;
      const auto single = verify_thm2(s);
      if (!single.passed()) {
        r.fail(single.instance + " M=" + single.evidence[0].second +
               " q=" + single.evidence[1].second);
      }
    });
  }
  r.add("sequences", checked);
  return r;
}

VerificationReport verify_lemma1(const PeriodicSequence& s) {
  const PeriodicSequence least =
      s.least_period() ? s : least_period(s.period_word());
  const std::size_t t = least.period();
  if (t > kLemma1MaxPeriod) {
    throw Error(ErrorCode::TooLarge, "stabilisation check limited to T <= " +
                                         std::to_string(kLemma1MaxPeriod));
  }
  VerificationReport r{"lemma1", "period=" + least.period_word().to_string()};
  const BigInt q = connection(least).q;
  const Word w = least.unroll(2 * t + 3);
  r.add("q", q);
  const ApproxPair at_2t = adic_min(w, 2 * t);
  r.add("mu(2T)", at_2t.mu);
  r.add("witness(2T)", "f=" + at_2t.f.get_str() + " q=" + at_2t.q.get_str());
  if (at_2t.mu < q) r.add("gap", "mu(2T) < q");
  for (std::size_t n = 2 * t + 1; n <= 2 * t + 3; ++n) {
    const BigInt mu = adic_min(w, n).mu;
    r.add("mu(" + std::to_string(n) + ")", mu);
    if (mu != q) {
      r.fail(r.instance + " N=" + std::to_string(n) + " mu=" + mu.get_str() +
             " q=" + q.get_str());
    }
  }
  return r;
}

VerificationReport verify_lemma1_exhaustive(std::size_t t_max) {
  VerificationReport r{"lemma1", "exhaustive T<=" + std::to_string(t_max)};
  std::size_t checked = 0, gaps = 0;
  for (std::size_t t = 1; t <= t_max && r.passed(); ++t) {
    for_each_primitive_period(t, [&](const PeriodicSequence& s) {
      if (!r.passed()) return;
      ++checked;
      const auto single = verify_lemma1(s);
      for (const auto& [k, v] : single.evidence) {
        if (k == "gap") ++gaps;
        if (k == "counterexample") r.fail(v);
      }
    });
  }
  r.add("sequences", checked);
  r.add("strict_gaps_at_2T", gaps);
  return r;
}

VerificationReport verify_cor1(const Word& w, const std::string& instance) {
  VerificationReport r{"cor1", instance};
  const std::size_t n = w.size();
  const auto corr = correlation2(w);
  const ApproxPair pair = adic_min(w, n);
  const std::size_t ceil_phi = ceil_log2(pair.mu);
  // ceil(Phi) >= log2(N + 1 - C2) - 1  <=>  2^(ceil(Phi) + 1) >= N + 1 - C2.
  const BigInt lhs = pow2(ceil_phi + 1);
  const BigInt rhs = BigInt(static_cast<unsigned long>(n + 1 - corr.value));
  r.add("N", n);
  r.add("C2", corr.value);
  r.add("mu", pair.mu);
  r.add("ceil_log2_mu", ceil_phi);
  r.add("rhs", format_real(log2_of(rhs) - 1.0));
  if (lhs < rhs) r.fail(instance);
  return r;
}

VerificationReport verify_thm4(const BigInt& q, std::uint64_t q_limit) {
  VerificationReport r{"thm4", "q=" + q.get_str()};
  if (q < 3 || mpz_even_p(q.get_mpz_t())) {
    throw Error(ErrorCode::InvalidParameter, "thm4 needs odd q >= 3");
  }
  if (q > BigInt(static_cast<unsigned long>(q_limit))) {
    throw Error(ErrorCode::TooLarge,
                "thm4 sweep limited to q <= " + std::to_string(q_limit));
  }
  const std::uint64_t qq = to_u64(q);
  const std::uint64_t t = multiplicative_order(2, q);
  std::set<std::size_t> values;
  std::vector<bool> seen(qq, false);
  std::size_t checked = 0, cosets = 0;
  // M is computed once per coset of <2>. Every other A in the coset must
  // give the matching cyclic shift: s(A * 2^k) is s(A) delayed by k.
  for (std::uint64_t a = 1; a < qq && r.passed(); ++a) {
    if (seen[a] || std::gcd(a, qq) != 1) continue;
    ++cosets;
    const PeriodicSequence base = fcsr_word(BigInt(static_cast<unsigned long>(a)), q);
    const std::size_t m = moc_periodic(base);
    values.insert(m);
    std::uint64_t member = a;
    for (std::uint64_t k = 0; k < t && r.passed(); ++k) {
      seen[member] = true;
      ++checked;
      const BigInt A(static_cast<unsigned long>(member));
      const std::string at = "A=" + std::to_string(member);
      if (k > 0 && fcsr_word(A, q).period_word() != base.shifted(t - k).period_word()) {
        r.fail(at + " is not a shift of A=" + std::to_string(a));
      }
      const std::size_t via_coset = moc_from_coset(A, q);
      if (via_coset != m) {
        r.fail(at + " coset=" + std::to_string(via_coset) +
               " sequence=" + std::to_string(m));
      }
      member = member * 2 % qq;
    }
  }
  r.add("T", static_cast<std::size_t>(t));
  r.add("A_checked", checked);
  r.add("cosets", cosets);
  r.add("M_values", join_sizes({values.begin(), values.end()}));
  return r;
}

VerificationReport verify_thm4_range(std::uint64_t q_max) {
  VerificationReport r{"thm4", "all odd 3<=q<=" + std::to_string(q_max)};
  std::size_t moduli = 0;
  for (std::uint64_t q = 3; q <= q_max && r.passed(); q += 2) {
    const auto single = verify_thm4(BigInt(static_cast<unsigned long>(q)), q_max);
    ++moduli;
    if (!single.passed()) {
      r.fail("q=" + std::to_string(q) + " " + single.evidence.front().second);
    }
  }
  r.add("moduli", moduli);
  return r;
}

VerificationReport verify_thm5(const BigInt& q) {
  VerificationReport r{"thm5", "q=" + q.get_str()};
  const std::size_t formula = moc_ell_formula(q);
  const std::size_t computed = moc_periodic(fcsr_word(1, q));
  r.add("formula", formula);
  r.add("M", computed);
  if (formula != computed) r.fail(r.instance);
  return r;
}

VerificationReport verify_thm5_range(std::uint64_t q_max) {
  VerificationReport r{"thm5", "all l-moduli q<=" + std::to_string(q_max)};
  std::size_t moduli = 0;
  for (std::uint64_t q = 3; q <= q_max && r.passed(); q += 2) {
    const BigInt big(static_cast<unsigned long>(q));
    if (!is_ell_modulus(big)) continue;
    ++moduli;
    const auto single = verify_thm5(big);
    if (!single.passed()) {
      r.fail(single.instance + " formula=" + single.evidence[0].second +
             " M=" + single.evidence[1].second);
    }
  }
  r.add("moduli", moduli);
  return r;
}

std::vector<BigInt> lemma3_moduli(unsigned k_max) {
  if (k_max > 40) throw Error(ErrorCode::TooLarge, "2^k+1 scan limited to k <= 40");
  std::vector<BigInt> out;
  for (unsigned k = 1; k <= k_max; ++k) {
    const BigInt q = pow2(k) + 1;
    if (is_ell_modulus(q)) out.push_back(q);
  }
  return out;
}

VerificationReport lemma3_scan(unsigned k_max) {
  VerificationReport r{"lemma3", "q=2^k+1, k<=" + std::to_string(k_max)};
  const auto found = lemma3_moduli(k_max);
  std::string listed = "{";
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (i) listed += ' ';
    listed += found[i].get_str();
  }
  listed += "}";
  r.add("l_moduli", listed);
  std::vector<BigInt> expected;
  for (unsigned v : {3u, 5u, 9u}) {
    if (BigInt(v) <= pow2(k_max) + 1) expected.emplace_back(v);
  }
  if (found != expected) r.fail(listed);
  return r;
}

VerificationReport verify_thm6(std::size_t t) {
  if (t < 2 || t > 20) {
    throw Error(ErrorCode::TooLarge, "thm6 scan needs 2 <= T <= 20");
  }
  VerificationReport r{"thm6", "T=" + std::to_string(t)};
  const BigInt maximal = pow2(t) - 1;
  std::size_t extremal = 0;
  for_each_primitive_period(t, [&](const PeriodicSequence& s) {
    if (moc_periodic(s) != t - 1) return;
    ++extremal;
    const BigInt q = connection(s).q;
    if (q != maximal) {
      r.fail("period=" + s.period_word().to_string() + " q=" + q.get_str());
    }
  });
  r.add("sequences_with_M=T-1", extremal);
  if (t == 8) {
    const PeriodicSequence example(Word{0, 0, 1, 0, 0, 1, 0, 0});
    const std::size_t m = moc_periodic(example);
    const BigInt q = connection(example).q;
    r.add("example_M", m);
    r.add("example_q", q);
    if (m != t - 2 || q != maximal / 3) {
      r.fail("example 00100100 M=" + std::to_string(m) + " q=" + q.get_str());
    }
  }
  return r;
}

VerificationReport verify_thm6_exhaustive(std::size_t t_max) {
  VerificationReport r{"thm6", "exhaustive 2<=T<=" + std::to_string(t_max)};
  std::size_t extremal = 0;
  for (std::size_t t = 2; t <= t_max && r.passed(); ++t) {
    const auto single = verify_thm6(t);
    extremal += std::stoul(single.evidence.front().second);
    for (const auto& [k, v] : single.evidence) {
      if (k == "counterexample") r.fail(single.instance + " " + v);
      if (k == "example_M" || k == "example_q") r.add(k, v);
    }
  }
  r.add("sequences_with_M=T-1", extremal);
  return r;
}

VerificationReport verify_msequence(const LfsrSpec& spec) {
  std::string taps;
  for (unsigned t : spec.taps) taps += (taps.empty() ? "" : "+") + std::to_string(t);
  VerificationReport r{"msequence", "r=" + std::to_string(spec.degree) +
                                        " taps=" + taps +
                                        " seed=" + spec.seed.to_string()};
  if (spec.degree <= 1) {
    r.status = Status::Skipped;
    r.reason = "degree 1 recurrence is the constant sequence";
    return r;
  }
  const PeriodicSequence s = lfsr_period(spec);
  const std::size_t t = s.period();
  const std::size_t expected_t = (std::size_t{1} << spec.degree) - 1;
  const std::size_t l = linear_profile(s.unroll(2 * t)).back();
  const BigInt q = connection(s).q;
  r.add("T", t);
  r.add("L", l);
  r.add("q", q);
  if (t != expected_t) {
    r.fail("period " + std::to_string(t) + " != 2^r-1 (feedback not primitive)");
  }
  if (l != spec.degree) r.fail("L=" + std::to_string(l));
  if (q != pow2(t) - 1) r.fail("q=" + q.get_str());
  return r;
}

VerificationReport verify_pattern_lower_bound(unsigned k, std::size_t n_max) {
  VerificationReport r{"lower_bound",
                       "pattern k=" + std::to_string(k) +
                           " N<=" + std::to_string(n_max)};
  const Word w = pattern_word(k, n_max);
  const auto m = moc_profile(w);
  const auto mu = adic_profile(w);
  // Thue-Morse: M > N/5 for N > 5 and ceil(Phi_2) >= N/5 for N >= 4.
  // k >= 2: both with N/6 from N >= 2^(k+3) - 7.
  const std::size_t divisor = k == 1 ? 5 : 6;
  const std::size_t chain_from = k == 1 ? 6 : (std::size_t{1} << (k + 3)) - 7;
  const std::size_t direct_from = k == 1 ? 4 : chain_from;
  std::size_t checked = 0;
  for (std::size_t n = std::min(chain_from, direct_from); n <= n_max; ++n) {
    const std::size_t c = ceil_log2(mu.at(n));
    const std::size_t mn = m.at(n);
    const std::string at = "N=" + std::to_string(n) + " M=" + std::to_string(mn) +
                           " ceil_log2_mu=" + std::to_string(c);
    if (n >= chain_from) {
      if (c + 1 < mn) r.fail("M <= ceil(log2 mu) + 1 " + at);
      if (divisor * mn <= n) r.fail("M > N/" + std::to_string(divisor) + " " + at);
    }
    if (n >= direct_from && divisor * c < n) {
      r.fail("ceil(Phi2) >= N/" + std::to_string(divisor) + " " + at);
    }
    ++checked;
    if (!r.passed()) break;
  }
  r.add("N_checked", checked);
  if (n_max >= 1) {
    r.add("M(N_max)", m.back());
    r.add("ceil_log2_mu(N_max)", ceil_log2(mu.back()));
  }
  return r;
}

VerificationReport verify_cross_measures(
    const Word& w, const std::string& instance,
    const std::vector<std::size_t>& expansion_points) {
  VerificationReport r{"cross_measures", instance};
  const auto m = moc_profile(w);
  const auto l = linear_profile(w);
  for (std::size_t n = 1; n <= w.size(); ++n) {
    if (m.at(n) > l.at(n)) {
      r.fail("M<=L at N=" + std::to_string(n) + " M=" + std::to_string(m.at(n)) +
             " L=" + std::to_string(l.at(n)));
      break;
    }
  }
  std::string e_values;
  for (std::size_t n : expansion_points) {
    if (n == 0 || n > w.size()) {
      throw Error(ErrorCode::InvalidParameter, "expansion point out of range");
    }
    const auto e = expansion_complexity(w, n, n + 1);
    const std::size_t ln = l.at(n);
    const std::size_t bound = std::min(ln + 1, n + 2 - ln);
    e_values += (e_values.empty() ? "" : " ") + std::to_string(n) + ":" +
                std::to_string(*e.value);
    if (*e.value > bound) {
      r.fail("E bound at N=" + std::to_string(n) + " E=" +
             std::to_string(*e.value) + " L=" + std::to_string(ln));
    }
  }
  r.add("N", w.size());
  if (!w.empty()) {
    r.add("M", m.back());
    r.add("L", l.back());
  }
  if (!e_values.empty()) r.add("E", e_values);
  return r;
}

}  // namespace seqlab
