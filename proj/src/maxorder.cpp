#include "seqlab/maxorder.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <unordered_map>

#include "seqlab/bounds.hpp"
#include "seqlab/error.hpp"

namespace seqlab {

namespace {

constexpr std::int32_t kNone = -1;

// Suffix automaton over {0, 1}. first_end is the end index of the first
// occurrence of the state's strings.
class SuffixAutomaton {
 public:
  struct State {
    std::size_t len = 0;
    std::int32_t link = kNone;
    std::array<std::int32_t, 2> next{kNone, kNone};
    std::size_t first_end = 0;
  };

  explicit SuffixAutomaton(std::size_t capacity) {
    states_.reserve(2 * capacity + 1);
    states_.push_back({});
  }

  // Length of the longest suffix of the current text that already occurs
  // followed by `1 - c`, or -1 if none (not even the empty suffix).
  long longest_suffix_followed_by(int c) const {
    for (std::int32_t p = last_; p != kNone; p = states_[p].link) {
      if (states_[p].next[c] != kNone) return static_cast<long>(states_[p].len);
    }
    return -1;
  }

  void extend(int c) {
    const auto cur = static_cast<std::int32_t>(states_.size());
    states_.push_back({states_[last_].len + 1, kNone, {kNone, kNone},
                       states_[last_].len});
    std::int32_t p = last_;
    while (p != kNone && states_[p].next[c] == kNone) {
      states_[p].next[c] = cur;
      p = states_[p].link;
    }
    if (p == kNone) {
      states_[cur].link = 0;
    } else {
      const std::int32_t q = states_[p].next[c];
      if (states_[p].len + 1 == states_[q].len) {
        states_[cur].link = q;
      } else {
        const auto clone = static_cast<std::int32_t>(states_.size());
        State copy = states_[q];
        copy.len = states_[p].len + 1;
        states_.push_back(copy);
        while (p != kNone && states_[p].next[c] == q) {
          states_[p].next[c] = clone;
          p = states_[p].link;
        }
        states_[q].link = clone;
        states_[cur].link = clone;
      }
    }
    last_ = cur;
  }

  const std::vector<State>& states() const noexcept { return states_; }

 private:
  std::vector<State> states_;
  std::int32_t last_ = 0;
};

std::uint64_t reverse_bits(std::uint64_t x) {
  std::uint64_t r = 0;
  for (int i = 0; i < 64; ++i, x >>= 1) r = (r << 1) | (x & 1u);
  return r;
}

void check_witness(const Word& w, const MocWitness& wit) {
  // Cheap self-check of the certificate; any failure is an internal bug.
  bool ok = wit.i < wit.j && wit.j + wit.length < w.size() &&
            w[wit.i + wit.length] != w[wit.j + wit.length];
  for (std::size_t k = 0; ok && k < wit.length; ++k) {
    ok = w[wit.i + k] == w[wit.j + k];
  }
  if (!ok) throw std::logic_error("maximum-order witness failed its check");
}

}  // namespace

MocResult moc(const Word& w) {
  SuffixAutomaton sam(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) sam.extend(w[i] ? 1 : 0);

  // A state with both out-edges holds factors followed by 0 and by 1; the
  // longest of them has length len.
  const auto& st = sam.states();
  std::int32_t best = kNone;
  for (std::size_t v = 0; v < st.size(); ++v) {
    if (st[v].next[0] != kNone && st[v].next[1] != kNone &&
        (best == kNone || st[v].len > st[best].len)) {
      best = static_cast<std::int32_t>(v);
    }
  }
  if (best == kNone) return {0, std::nullopt};

  const std::size_t len = st[best].len;
  // u.c first ends at first_end of the c-successor, so u starts len earlier.
  const std::size_t p0 = st[st[best].next[0]].first_end - len;
  const std::size_t p1 = st[st[best].next[1]].first_end - len;
  MocWitness wit{std::min(p0, p1), std::max(p0, p1), len};
  check_witness(w, wit);
  return {len + 1, wit};
}

Profile<std::size_t> moc_profile(const Word& w) {
  Profile<std::size_t> profile;
  SuffixAutomaton sam(w.size());
  long longest_special = -1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int c = w[i] ? 1 : 0;
    // Appending c makes every suffix seen earlier before 1-c right-special.
    longest_special =
        std::max(longest_special, sam.longest_suffix_followed_by(1 - c));
    sam.extend(c);
    profile.push_back(static_cast<std::size_t>(longest_special + 1));
  }
  return profile;
}

MocResult moc_oracle(const Word& w, std::size_t bound) {
  if (w.size() > bound) {
    throw Error(ErrorCode::OracleBoundExceeded,
                "moc_oracle limited to length " + std::to_string(bound));
  }
  const std::string text = w.to_string();
  const std::string_view view(text);
  const std::size_t n = w.size();
  std::optional<MocWitness> last_conflict;
  for (std::size_t m = 0; m < n; ++m) {
    std::unordered_map<std::string_view, std::size_t> first_seen;
    std::optional<MocWitness> conflict;
    for (std::size_t i = 0; i + m < n; ++i) {
      const auto [it, inserted] = first_seen.emplace(view.substr(i, m), i);
      if (!inserted && text[it->second + m] != text[i + m]) {
        conflict = MocWitness{it->second, i, m};
        break;
      }
    }
    if (!conflict) return {m, last_conflict};
    last_conflict = conflict;
  }
  return {n, last_conflict};
}

MocResult moc_oracle(const Word& w) {
  return moc_oracle(w, oracle_bounds().moc);
}

std::size_t moc_periodic(const PeriodicSequence& s) {
  const PeriodicSequence least =
      s.least_period() ? s : least_period(s.period_word());
  const std::size_t t = least.period();
  return moc(least.unroll(2 * t - 1)).m;
}

std::vector<BigInt> coset(const BigInt& A, const BigInt& q) {
  if (q < 3 || mpz_even_p(q.get_mpz_t())) {
    throw Error(ErrorCode::InvalidParameter, "coset needs odd q >= 3");
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), q.get_mpz_t());
  if (g != 1) {
    throw Error(ErrorCode::NotCoprime,
                "gcd(" + A.get_str() + ", " + q.get_str() + ") != 1");
  }
  const BigInt start = ((A % q) + q) % q;
  std::vector<BigInt> out;
  BigInt u = start;
  do {
    out.push_back(u);
    u = (u * 2) % q;
  } while (u != start);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t moc_from_coset(const BigInt& A, const BigInt& q) {
  if (bit_length(q) < 64) {
    if (q < 3 || mpz_even_p(q.get_mpz_t())) {
      throw Error(ErrorCode::InvalidParameter, "coset needs odd q >= 3");
    }
    BigInt r = ((A % q) + q) % q;
    const std::uint64_t m = to_u64(q), start = to_u64(r);
    if (std::gcd(start, m) != 1) {
      throw Error(ErrorCode::NotCoprime,
                  "gcd(" + A.get_str() + ", " + q.get_str() + ") != 1");
    }
    // Two residues agree mod 2^n iff their low n bits match; sorting by the
    // bit-reversed value puts the longest common low-bit runs side by side.
    std::vector<std::uint64_t> keys;
    std::uint64_t u = start;
    do {
      keys.push_back(reverse_bits(u));
      u = u * 2 % m;
    } while (u != start);
    if (keys.size() <= 1) return 0;
    std::sort(keys.begin(), keys.end());
    std::size_t longest = 0;
    for (std::size_t k = 1; k < keys.size(); ++k) {
      const auto common =
          static_cast<std::size_t>(std::countl_zero(keys[k] ^ keys[k - 1]));
      longest = std::max(longest, common);
    }
    return longest + 1;
  }
  const auto d = coset(A, q);
  if (d.size() <= 1) return 0;
  for (std::size_t n = 1;; ++n) {
    std::vector<BigInt> low(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
      mpz_fdiv_r_2exp(low[k].get_mpz_t(), d[k].get_mpz_t(), n);
    }
    std::sort(low.begin(), low.end());
    if (std::adjacent_find(low.begin(), low.end()) == low.end()) return n;
  }
}

std::size_t moc_ell_formula(const BigInt& q) {
  if (!is_ell_modulus(q)) {
    throw Error(ErrorCode::NotEllModulus,
                q.get_str() + " is not an odd prime power with 2 primitive");
  }
  if (q == 3 || q == 5 || q == 9) return floor_log2(q);
  return ceil_log2(q);
}

}  // namespace seqlab
