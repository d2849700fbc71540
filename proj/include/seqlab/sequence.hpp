#pragma once

// Binary sequence data model. Bit order is fixed across the library: index 0
// is the first emitted symbol and carries weight 2^0 in prefix_value.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqlab/numtheory.hpp"

namespace seqlab {

// Finite binary word, packed 64 bits per limb (bit i in limb i/64).
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t size, bool value = false);
  Word(std::initializer_list<int> bits);

  // '0'/'1' characters only; anything else is InvalidParameter.
  static Word from_string(std::string_view bits);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool operator[](std::size_t i) const noexcept {
    return (limbs_[i >> 6] >> (i & 63)) & 1u;
  }
  bool at(std::size_t i) const;

  void set(std::size_t i, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      limbs_[i >> 6] |= mask;
    } else {
      limbs_[i >> 6] &= ~mask;
    }
  }
  void push_back(bool value);
  void append(const Word& other);

  Word prefix(std::size_t n) const;
  Word slice(std::size_t pos, std::size_t len) const;
  Word reversed() const;

  // Repeats this word cyclically to length n (this must be non-empty).
  Word repeat_to(std::size_t n) const;

  bool is_constant() const noexcept;
  std::size_t count_ones() const noexcept;

  std::span<const std::uint64_t> limbs() const noexcept { return limbs_; }
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.size_ == b.size_ && a.limbs_ == b.limbs_;
  }

 private:
  void trim() noexcept;

  std::vector<std::uint64_t> limbs_;
  std::size_t size_ = 0;
};

// One period of a T-periodic sequence, T >= 1.
class PeriodicSequence {
 public:
  // Takes `period` verbatim; least_period() reports whether it is minimal.
  explicit PeriodicSequence(Word period);

  // Shrinks to the least period.
  static PeriodicSequence normalized(const Word& period);

  const Word& period_word() const noexcept { return period_; }
  std::size_t period() const noexcept { return period_.size(); }
  bool least_period() const noexcept { return least_; }

  // The sequence's first n terms.
  Word unroll(std::size_t n) const { return period_.repeat_to(n); }

  // Left cyclic shift by tau.
  PeriodicSequence shifted(std::size_t tau) const;

  friend bool operator==(const PeriodicSequence&,
                         const PeriodicSequence&) = default;

 private:
  Word period_;
  bool least_ = false;
};

// Sum of s_n 2^n over the word; the sequence equals -A/q as a 2-adic number.
struct RationalRep {
  BigInt A;
  BigInt q;
};

// Per-N values for N = 1..size(); at(N) is 1-based.
template <class T>
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<T> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const T& at(std::size_t n) const { return values_.at(n - 1); }
  const T& back() const { return values_.back(); }
  const std::vector<T>& values() const noexcept { return values_; }
  void push_back(T v) { values_.push_back(std::move(v)); }

  bool nondecreasing() const {
    for (std::size_t i = 1; i < values_.size(); ++i) {
      if (values_[i] < values_[i - 1]) return false;
    }
    return true;
  }

 private:
  std::vector<T> values_;
};

BigInt prefix_value(const Word& w);

// Least period of a word read as one period (prefix-function based).
std::size_t least_period_length(const Word& w);
PeriodicSequence least_period(const Word& w);

PeriodicSequence reverse_period(const PeriodicSequence& s);

// Bit-file format: ASCII '0'/'1'; space, tab, CR and LF are skipped; any
// other byte raises MalformedBitFile carrying its offset. Writing emits 64
// bits per line.
Word parse_bits(std::string_view text);
Word read_bits(std::istream& in);
Word read_bits_file(const std::string& path);
void write_bits(const Word& w, std::ostream& out);
void write_bits_file(const Word& w, const std::string& path);

}  // namespace seqlab
