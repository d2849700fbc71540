#include "seqlab/sequence.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "seqlab/error.hpp"

namespace seqlab {

namespace {

std::size_t limb_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

Word::Word(std::size_t size, bool value)
    : limbs_(limb_count(size), value ? ~std::uint64_t{0} : 0), size_(size) {
  trim();
}

Word::Word(std::initializer_list<int> bits) {
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw Error(ErrorCode::InvalidParameter, "word symbols must be 0 or 1");
    }
    push_back(b == 1);
  }
}

Word Word::from_string(std::string_view bits) {
  Word w;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::InvalidParameter,
                  std::string("not a bit: '") + c + "'");
    }
    w.push_back(c == '1');
  }
  return w;
}

bool Word::at(std::size_t i) const {
  if (i >= size_) {
    throw Error(ErrorCode::InvalidParameter,
                "index " + std::to_string(i) + " out of range");
  }
  return (*this)[i];
}

void Word::push_back(bool value) {
  if ((size_ & 63) == 0) limbs_.push_back(0);
  ++size_;
  set(size_ - 1, value);
}

void Word::append(const Word& other) {
  for (std::size_t i = 0; i < other.size(); ++i) push_back(other[i]);
}

Word Word::prefix(std::size_t n) const { return slice(0, std::min(n, size_)); }

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos > size_ || len > size_ - pos) {
    throw Error(ErrorCode::InvalidParameter, "slice out of range");
  }
  Word out(len);
  if (len == 0) return out;
  const std::size_t shift = pos & 63;
  const std::size_t base = pos >> 6;
  for (std::size_t k = 0; k < out.limbs_.size(); ++k) {
    std::uint64_t lo = limbs_[base + k] >> shift;
    if (shift != 0 && base + k + 1 < limbs_.size()) {
      lo |= limbs_[base + k + 1] << (64 - shift);
    }
    out.limbs_[k] = lo;
  }
  out.trim();
  return out;
}

Word Word::reversed() const {
  Word out(size_);
  for (std::size_t i = 0; i < size_; ++i) out.set(size_ - 1 - i, (*this)[i]);
  return out;
}

Word Word::repeat_to(std::size_t n) const {
  if (size_ == 0) {
    throw Error(ErrorCode::InvalidParameter, "cannot repeat an empty word");
  }
  Word out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, (*this)[i % size_]);
  return out;
}

bool Word::is_constant() const noexcept {
  const std::size_t ones = count_ones();
  return ones == 0 || ones == size_;
}

std::size_t Word::count_ones() const noexcept {
  std::size_t total = 0;
  for (auto limb : limbs_) total += static_cast<std::size_t>(std::popcount(limb));
  return total;
}

std::string Word::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

void Word::trim() noexcept {
  if (size_ & 63) {
    limbs_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }
}

PeriodicSequence::PeriodicSequence(Word period) : period_(std::move(period)) {
  if (period_.empty()) {
    throw Error(ErrorCode::InvalidParameter, "period must have length >= 1");
  }
  least_ = least_period_length(period_) == period_.size();
}

PeriodicSequence PeriodicSequence::normalized(const Word& period) {
  return seqlab::least_period(period);
}

PeriodicSequence PeriodicSequence::shifted(std::size_t tau) const {
  const std::size_t t = period();
  Word out(t);
  for (std::size_t i = 0; i < t; ++i) out.set(i, period_[(i + tau) % t]);
  return PeriodicSequence(std::move(out));
}

BigInt prefix_value(const Word& w) {
  BigInt v;
  const auto limbs = w.limbs();
  if (!limbs.empty()) {
    mpz_import(v.get_mpz_t(), limbs.size(), -1, sizeof(std::uint64_t), 0, 0,
               limbs.data());
  }
  return v;
}

std::size_t least_period_length(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) {
    throw Error(ErrorCode::InvalidParameter, "period must have length >= 1");
  }
  // KMP failure function; the smallest period is n - border when it divides n.
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  const std::size_t p = n - fail[n - 1];
  return n % p == 0 ? p : n;
}

PeriodicSequence least_period(const Word& w) {
  return PeriodicSequence(w.prefix(least_period_length(w)));
}

PeriodicSequence reverse_period(const PeriodicSequence& s) {
  return PeriodicSequence(s.period_word().reversed());
}

Word parse_bits(std::string_view text) {
  Word w;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '0': w.push_back(false); break;
      case '1': w.push_back(true); break;
      case ' ':
      case '\t':
      case '\n':
      case '\r': break;
      default:
        throw Error(ErrorCode::MalformedBitFile,
                    "illegal byte at offset " + std::to_string(i), i);
    }
  }
  return w;
}

Word read_bits(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return parse_bits(text);
}

Word read_bits_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return read_bits(in);
}

void write_bits(const Word& w, std::ostream& out) {
  std::string line;
  for (std::size_t i = 0; i < w.size(); ++i) {
    line.push_back(w[i] ? '1' : '0');
    if (line.size() == 64) {
      out << line << '\n';
      line.clear();
    }
  }
  if (!line.empty()) out << line << '\n';
}

void write_bits_file(const Word& w, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path);
  write_bits(w, out);
}

}  // namespace seqlab
