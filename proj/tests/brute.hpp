#pragma once

// Slow reference implementations used only by the tests.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <string>

#include "seqlab/measures.hpp"
#include "seqlab/sequence.hpp"

namespace brute {

inline seqlab::Word random_word(std::mt19937_64& rng, std::size_t n) {
  seqlab::Word w(n);
  for (std::size_t i = 0; i < n; ++i) w.set(i, rng() & 1u);
  return w;
}

inline seqlab::Word word_of_bits(std::uint64_t bits, std::size_t n) {
  seqlab::Word w(n);
  for (std::size_t i = 0; i < n; ++i) w.set(i, (bits >> i) & 1u);
  return w;
}

// C_2 straight from the definition: every (U, d1 < d2) with U + d2 <= N.
inline std::size_t c2(const seqlab::Word& w) {
  const long n = static_cast<long>(w.size());
  long best = 0;
  for (long d1 = 0; d1 < n; ++d1) {
    for (long d2 = d1 + 1; d2 < n; ++d2) {
      long sum = 0;
      for (long u = 0; u + d2 < n; ++u) {
        sum += (w[u + d1] ^ w[u + d2]) ? -1 : 1;
        best = std::max(best, std::labs(sum));
      }
    }
  }
  return static_cast<std::size_t>(best);
}

inline std::size_t ck(const seqlab::Word& w, unsigned k) {
  const long n = static_cast<long>(w.size());
  long best = 0;
  std::vector<long> d(k);
  // Lexicographic walk over d_1 < ... < d_k < n.
  for (unsigned i = 0; i < k; ++i) d[i] = i;
  while (true) {
    long sum = 0;
    for (long u = 0; u + d[k - 1] < n; ++u) {
      bool x = false;
      for (unsigned i = 0; i < k; ++i) x ^= w[u + d[i]];
      sum += x ? -1 : 1;
      best = std::max(best, std::labs(sum));
    }
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && d[i] == n - static_cast<long>(k) + i) --i;
    if (i < 0) break;
    ++d[i];
    for (unsigned j = i + 1; j < k; ++j) d[j] = d[j - 1] + 1;
  }
  return static_cast<std::size_t>(best);
}

// Least L admitting a linear recurrence of order L for the whole word.
inline std::size_t linear(const seqlab::Word& w) {
  const std::size_t n = w.size();
  for (std::size_t l = 0; l <= n; ++l) {
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << l); ++c) {
      bool ok = true;
      for (std::size_t i = l; i < n && ok; ++i) {
        bool v = false;
        for (std::size_t j = 1; j <= l; ++j) {
          if ((c >> (j - 1)) & 1u) v ^= w[i - j];
        }
        ok = v == w[i];
      }
      if (ok) return l;
    }
  }
  return n;
}

// p_n = p_{n/2} + [n = -1 mod 2^k], p_0 = 0.
inline bool pattern_recursive(unsigned k, std::uint64_t n,
                              std::map<std::uint64_t, bool>& memo) {
  if (n == 0) return false;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  const bool v = pattern_recursive(k, n / 2, memo) ^ ((n & mask) == mask);
  memo[n] = v;
  return v;
}

// M from the definition: least m with every m-window followed by one bit.
inline std::size_t moc(const seqlab::Word& w) {
  const std::string s = w.to_string();
  if (w.is_constant()) return 0;
  for (std::size_t m = 1; m <= s.size(); ++m) {
    std::map<std::string, char> next;
    bool ok = true;
    for (std::size_t i = 0; i + m < s.size() && ok; ++i) {
      auto [it, fresh] = next.emplace(s.substr(i, m), s[i + m]);
      ok = fresh || it->second == s[i + m];
    }
    if (ok) return m;
  }
  return s.size();
}

}  // namespace brute
