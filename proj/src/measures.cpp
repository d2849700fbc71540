#include "seqlab/measures.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "seqlab/bounds.hpp"
#include "seqlab/error.hpp"

namespace seqlab {

namespace {

std::size_t limb_count(std::size_t bits) { return (bits + 63) / 64; }

// 64 bits of `limbs` starting at bit `pos`; bits past the end read as 0.
std::uint64_t extract64(std::span<const std::uint64_t> limbs, std::size_t pos) {
  const std::size_t base = pos >> 6;
  const std::size_t shift = pos & 63;
  if (base >= limbs.size()) return 0;
  std::uint64_t lo = limbs[base] >> shift;
  if (shift != 0 && base + 1 < limbs.size()) lo |= limbs[base + 1] << (64 - shift);
  return lo;
}

}  // namespace

GF2Poly GF2Poly::monomial(std::size_t degree) {
  GF2Poly p;
  p.set(degree, true);
  return p;
}

GF2Poly GF2Poly::from_word(const Word& w) {
  GF2Poly p;
  p.limbs_.assign(w.limbs().begin(), w.limbs().end());
  p.normalize();
  return p;
}

long GF2Poly::degree() const noexcept {
  if (limbs_.empty()) return -1;
  const std::uint64_t top = limbs_.back();
  return static_cast<long>(64 * (limbs_.size() - 1)) + 63 -
         std::countl_zero(top);
}

bool GF2Poly::coefficient(std::size_t i) const noexcept {
  const std::size_t k = i >> 6;
  return k < limbs_.size() && ((limbs_[k] >> (i & 63)) & 1u);
}

void GF2Poly::set(std::size_t i, bool value) {
  const std::size_t k = i >> 6;
  if (k >= limbs_.size()) {
    if (!value) return;
    limbs_.resize(k + 1, 0);
  }
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  limbs_[k] = value ? (limbs_[k] | mask) : (limbs_[k] & ~mask);
  normalize();
}

void GF2Poly::add_shifted(const GF2Poly& other, std::size_t shift) {
  if (other.limbs_.empty()) return;
  const std::size_t limb_shift = shift >> 6;
  const std::size_t bit_shift = shift & 63;
  const std::size_t needed = other.limbs_.size() + limb_shift + 1;
  if (limbs_.size() < needed) limbs_.resize(needed, 0);
  for (std::size_t k = 0; k < other.limbs_.size(); ++k) {
    const std::uint64_t v = other.limbs_[k];
    limbs_[k + limb_shift] ^= v << bit_shift;
    if (bit_shift != 0) limbs_[k + limb_shift + 1] ^= v >> (64 - bit_shift);
  }
  normalize();
}

void GF2Poly::truncate(std::size_t n) {
  const std::size_t keep = limb_count(n);
  if (limbs_.size() > keep) limbs_.resize(keep);
  if ((n & 63) != 0 && limbs_.size() == keep && keep > 0) {
    limbs_.back() &= (std::uint64_t{1} << (n & 63)) - 1;
  }
  normalize();
}

GF2Poly GF2Poly::mul_trunc(const GF2Poly& other, std::size_t n) const {
  GF2Poly out;
  const long deg = degree();
  for (long i = 0; i <= deg && static_cast<std::size_t>(i) < n; ++i) {
    if (coefficient(static_cast<std::size_t>(i))) {
      out.add_shifted(other, static_cast<std::size_t>(i));
    }
  }
  out.truncate(n);
  return out;
}

bool operator==(const GF2Poly& a, const GF2Poly& b) noexcept {
  return a.limbs_ == b.limbs_;
}

void GF2Poly::normalize() noexcept {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

namespace {

// Shared Berlekamp-Massey loop; `on_step` receives L after each bit.
template <class OnStep>
LinearComplexity run_berlekamp_massey(const Word& w, OnStep&& on_step) {
  const std::size_t n_max = w.size();
  // Discrepancy at step n is sum_i c_i s_{n-i}; with r the reversed word,
  // s_{n-i} = r[n_max - 1 - n + i], so it is a packed AND of C and r.
  const Word reversed = w.reversed();
  const auto rev = reversed.limbs();
  GF2Poly c = GF2Poly::one();
  GF2Poly b = GF2Poly::one();
  std::size_t length = 0;
  std::size_t shift = 1;
  for (std::size_t n = 0; n < n_max; ++n) {
    const std::size_t offset = n_max - 1 - n;
    const auto cl = c.limbs();
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cl.size(); ++k) {
      acc ^= cl[k] & extract64(rev, offset + 64 * k);
    }
    const bool discrepancy = std::popcount(acc) & 1;
    if (!discrepancy) {
      ++shift;
    } else if (2 * length <= n) {
      GF2Poly previous = c;
      c.add_shifted(b, shift);
      length = n + 1 - length;
      b = std::move(previous);
      shift = 1;
    } else {
      c.add_shifted(b, shift);
      ++shift;
    }
    on_step(length);
  }
  return {length, c};
}

}  // namespace

Profile<std::size_t> linear_profile(const Word& w) {
  Profile<std::size_t> profile;
  run_berlekamp_massey(w, [&](std::size_t l) { profile.push_back(l); });
  return profile;
}

LinearComplexity berlekamp_massey(const Word& w) {
  return run_berlekamp_massey(w, [](std::size_t) {});
}

namespace {

struct Candidate {
  std::size_t value = 0;
  CorrelationWitness witness;
};

bool lex_less(const CorrelationWitness& a, const CorrelationWitness& b) {
  if (a.window != b.window) return a.window < b.window;
  return a.offsets < b.offsets;
}

// Best window over x_j = (-1)^(sum over lags of s_{j+lag}), j in
// [0, N - lags.back()). Returns value and the least (U, d_1) achieving it.
Candidate best_window(const Word& w, const std::vector<std::size_t>& lags) {
  const std::size_t len = w.size() - lags.back();
  std::vector<long long> prefix(len + 1, 0);
  for (std::size_t j = 0; j < len; ++j) {
    bool parity = false;
    for (std::size_t lag : lags) parity ^= w[j + lag];
    prefix[j + 1] = prefix[j] + (parity ? -1 : 1);
  }
  const auto [lo_it, hi_it] = std::minmax_element(prefix.begin(), prefix.end());
  const long long lo = *lo_it, hi = *hi_it;

  // Closest pair (a < b) with {P[a], P[b]} = {lo, hi}; least a on ties.
  std::size_t best_u = std::numeric_limits<std::size_t>::max(), best_a = 0;
  long long best_sum = 0;
  std::optional<std::size_t> last_lo, last_hi;
  for (std::size_t i = 0; i <= len; ++i) {
    if (prefix[i] == hi && last_lo && i - *last_lo < best_u) {
      best_u = i - *last_lo;
      best_a = *last_lo;
      best_sum = hi - lo;
    }
    if (prefix[i] == lo && last_hi && i - *last_hi < best_u) {
      best_u = i - *last_hi;
      best_a = *last_hi;
      best_sum = lo - hi;
    }
    if (prefix[i] == lo) last_lo = i;
    if (prefix[i] == hi) last_hi = i;
  }
  Candidate c;
  c.value = static_cast<std::size_t>(hi - lo);
  c.witness.window = best_u;
  c.witness.value = best_sum;
  for (std::size_t lag : lags) c.witness.offsets.push_back(best_a + lag);
  return c;
}

void offer(std::optional<Candidate>& best, Candidate c) {
  if (!best || c.value > best->value ||
      (c.value == best->value && lex_less(c.witness, best->witness))) {
    best = std::move(c);
  }
}

}  // namespace

CorrelationResult correlation2(const Word& w) {
  if (w.size() < 2) throw Error(ErrorCode::TooShort, "C_2 needs length >= 2");
  std::optional<Candidate> best;
  for (std::size_t lag = 1; lag < w.size(); ++lag) {
    offer(best, best_window(w, {0, lag}));
  }
  return {best->value, std::move(best->witness)};
}

Profile<std::size_t> correlation2_profile(const Word& w) {
  Profile<std::size_t> profile;
  const std::size_t n_max = w.size();
  // Per lag: running prefix sum and its extremes (including P[0] = 0).
  std::vector<long long> sum(n_max, 0), hi(n_max, 0), lo(n_max, 0);
  std::size_t current = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    // Prefix length n adds index j = n - 1 - lag to every lag in [1, n).
    for (std::size_t lag = 1; lag < n; ++lag) {
      const std::size_t j = n - 1 - lag;
      sum[lag] += (w[j] ^ w[j + lag]) ? -1 : 1;
      hi[lag] = std::max(hi[lag], sum[lag]);
      lo[lag] = std::min(lo[lag], sum[lag]);
      current = std::max(current, static_cast<std::size_t>(hi[lag] - lo[lag]));
    }
    profile.push_back(current);
  }
  return profile;
}

CorrelationResult correlation_k(const Word& w, unsigned k, std::size_t bound) {
  if (k < 2) throw Error(ErrorCode::InvalidParameter, "order k must be >= 2");
  if (k > 4) throw Error(ErrorCode::BoundExceeded, "order k limited to 4");
  if (w.size() < k) {
    throw Error(ErrorCode::TooShort,
                "C_" + std::to_string(k) + " needs length >= k");
  }
  if (k == 2) return correlation2(w);
  if (w.size() > bound) {
    throw Error(ErrorCode::BoundExceeded,
                "C_k for k >= 3 limited to length " + std::to_string(bound));
  }
  std::optional<Candidate> best;
  std::vector<std::size_t> lags(k, 0);
  // Strictly increasing lags 0 = l_1 < l_2 < ... < l_k <= N - 1.
  auto recurse = [&](auto&& self, unsigned idx) -> void {
    if (idx == k) {
      offer(best, best_window(w, lags));
      return;
    }
    for (std::size_t l = lags[idx - 1] + 1; l + (k - 1 - idx) < w.size(); ++l) {
      lags[idx] = l;
      self(self, idx + 1);
    }
  };
  recurse(recurse, 1);
  return {best->value, std::move(best->witness)};
}

CorrelationResult correlation_k(const Word& w, unsigned k) {
  return correlation_k(w, k, oracle_bounds().corr);
}

GF2Poly evaluate_bivariate(const std::vector<Monomial>& h, const Word& w,
                           std::size_t n) {
  const GF2Poly g = GF2Poly::from_word(w.prefix(n));
  GF2Poly out;
  for (const auto& mono : h) {
    GF2Poly term = GF2Poly::one();
    for (std::size_t j = 0; j < mono.y_degree; ++j) term = term.mul_trunc(g, n);
    GF2Poly shifted;
    shifted.add_shifted(term, mono.x_degree);
    shifted.truncate(n);
    out += shifted;
  }
  out.truncate(n);
  return out;
}

ExpansionResult expansion_complexity(const Word& w, std::size_t n,
                                     std::size_t d_max) {
  if (n > w.size()) {
    throw Error(ErrorCode::InvalidParameter, "N exceeds the word length");
  }
  if (d_max == 0) throw Error(ErrorCode::InvalidParameter, "d_max must be >= 1");
  if (n > oracle_bounds().expansion) {
    throw Error(ErrorCode::BoundExceeded,
                "expansion complexity limited to N <= " +
                    std::to_string(oracle_bounds().expansion));
  }
  const Word prefix = w.prefix(n);
  if (prefix.count_ones() == 0) return {0, {}};

  const GF2Poly g = GF2Poly::from_word(prefix);
  std::vector<GF2Poly> powers{GF2Poly::one()};  // G^j mod x^n
  std::vector<Monomial> monomials;

  // Basis keyed by leading bit; `combo` records which monomials were summed.
  struct Row {
    GF2Poly vec;
    std::vector<bool> combo;
  };
  std::vector<std::optional<Row>> basis(n);

  for (std::size_t d = 0; d <= d_max; ++d) {
    if (d >= powers.size()) powers.push_back(powers.back().mul_trunc(g, n));
    for (std::size_t j = 0; j <= d; ++j) {
      const std::size_t i = d - j;
      monomials.push_back({i, j});
      Row row;
      row.vec.add_shifted(powers[j], i);
      row.vec.truncate(n);
      row.combo.assign(monomials.size(), false);
      row.combo.back() = true;
      for (;;) {
        const long lead = row.vec.degree();
        if (lead < 0) {
          // Dependency: the combination is a nonzero annihilating h.
          ExpansionResult result{d, {}};
          for (std::size_t m = 0; m < row.combo.size(); ++m) {
            if (row.combo[m]) result.witness.push_back(monomials[m]);
          }
          return result;
        }
        auto& pivot = basis[static_cast<std::size_t>(lead)];
        if (!pivot) {
          pivot = std::move(row);
          break;
        }
        row.vec += pivot->vec;
        for (std::size_t m = 0; m < pivot->combo.size(); ++m) {
          if (pivot->combo[m]) row.combo[m] = !row.combo[m];
        }
      }
    }
  }
  return {std::nullopt, {}};
}

}  // namespace seqlab
