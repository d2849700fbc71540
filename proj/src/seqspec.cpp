#include <cctype>
#include <map>

#include "seqlab/cli.hpp"
#include "seqlab/error.hpp"
#include "seqlab/numtheory.hpp"

namespace seqlab {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Zero: return "zero";
    case Family::Ones: return "ones";
    case Family::Pattern: return "pattern";
    case Family::Zeckendorf: return "zeckendorf";
    case Family::Legendre: return "legendre";
    case Family::Ell: return "ell";
    case Family::Lfsr: return "lfsr";
    case Family::File: return "file";
  }
  return "unknown";
}

namespace {

[[noreturn]] void parse_error(const std::string& what, std::size_t pos) {
  throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(pos),
              pos);
}

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidParameter, what);
}

BigInt parse_integer(std::string_view s, std::size_t pos) {
  if (s.empty()) parse_error("expected an integer", pos);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      parse_error("expected a digit", pos + i);
    }
  }
  return BigInt(std::string(s));
}

struct Param {
  std::string value;
  std::size_t pos = 0;  // of the value
  bool used = false;
};

class Params {
 public:
  Params(std::string family, std::map<std::string, Param> params)
      : family_(std::move(family)), params_(std::move(params)) {}

  const Param* find(const std::string& key) {
    auto it = params_.find(key);
    if (it == params_.end()) return nullptr;
    it->second.used = true;
    return &it->second;
  }
  const Param& need(const std::string& key) {
    if (const Param* p = find(key)) return *p;
    throw Error(ErrorCode::MissingParameter,
                family_ + " needs parameter '" + key + "'");
  }
  BigInt integer(const std::string& key) {
    const Param& p = need(key);
    return parse_integer(p.value, p.pos);
  }
  // Every key must have been consumed by the family.
  void finish(const std::map<std::string, std::size_t>& key_pos) const {
    for (const auto& [k, p] : params_) {
      if (!p.used) parse_error("unknown parameter '" + k + "' for " + family_,
                               key_pos.at(k));
    }
  }

 private:
  std::string family_;
  std::map<std::string, Param> params_;
};

unsigned small_unsigned(const BigInt& v, const std::string& what,
                        unsigned long limit) {
  if (v > BigInt(limit)) invalid(what + " must be <= " + std::to_string(limit));
  return static_cast<unsigned>(v.get_ui());
}

}  // namespace

PolySpec parse_poly(std::string_view text, std::size_t offset) {
  std::vector<BigInt> coeffs;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  auto digits = [&]() -> std::string_view {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return text.substr(start, i - start);
  };
  skip();
  if (i == text.size()) parse_error("empty polynomial", offset + i);
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      parse_error("expected '+' or '-'", offset + i);
    }
    first = false;
    BigInt coef = 1;
    bool have_coef = false;
    const std::string_view num = digits();
    if (!num.empty()) {
      coef = BigInt(std::string(num));
      have_coef = true;
      skip();
    }
    std::size_t exponent = 0;
    bool have_var = false;
    if (have_coef && i < text.size() && text[i] == '*') {
      ++i;
      skip();
      if (i >= text.size() || text[i] != 'n') parse_error("expected 'n'", offset + i);
    }
    if (i < text.size() && text[i] == 'n') {
      have_var = true;
      exponent = 1;
      ++i;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        const std::size_t at = i;
        const std::string_view e = digits();
        if (e.empty()) parse_error("expected an exponent", offset + at);
        if (e.size() > 3 || std::stoul(std::string(e)) > 64) {
          parse_error("exponent above 64", offset + at);
        }
        exponent = std::stoul(std::string(e));
        skip();
      }
    }
    if (!have_coef && !have_var) parse_error("expected a term", offset + i);
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
    coeffs[exponent] += sign * coef;
  }
  return PolySpec(std::move(coeffs));
}

SeqSpec parse_seqspec(std::string_view text) {
  SeqSpec spec;
  spec.text = std::string(text);
  const std::size_t name_end = std::min(text.find_first_of(":@"), text.size());
  const std::string name(text.substr(0, name_end));
  if (name.empty()) parse_error("missing sequence name", 0);

  std::map<std::string, Param> params;
  std::map<std::string, std::size_t> key_pos;
  std::size_t i = name_end;
  if (i < text.size() && text[i] == ':') {
    ++i;
    const std::size_t end = std::min(text.find('@', i), text.size());
    while (true) {
      const std::size_t item_end = std::min(text.find(',', i), end);
      const std::string_view item = text.substr(i, item_end - i);
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) parse_error("expected key=value", i);
      if (eq == 0) parse_error("empty key", i);
      const std::string key(item.substr(0, eq));
      if (params.count(key)) parse_error("duplicate key '" + key + "'", i);
      params[key] = Param{std::string(item.substr(eq + 1)), i + eq + 1};
      key_pos[key] = i;
      i = item_end;
      if (i == end) break;
      ++i;
    }
  }
  if (i < text.size()) {
    // text[i] == '@'
    constexpr std::string_view tag = "@poly=";
    if (text.substr(i, tag.size()) != tag) parse_error("expected '@poly='", i);
    i += tag.size();
    spec.along = parse_poly(text.substr(i), i);
  }

  Params p(name, std::move(params));
  if (name == "zero") {
    spec.family = Family::Zero;
  } else if (name == "ones") {
    spec.family = Family::Ones;
  } else if (name == "thue-morse") {
    spec.family = Family::Pattern;
    spec.k = 1;
  } else if (name == "rudin-shapiro") {
    spec.family = Family::Pattern;
    spec.k = 2;
  } else if (name == "pattern") {
    spec.family = Family::Pattern;
    const BigInt k = p.integer("k");
    if (k < 1) invalid("pattern length k must be >= 1");
    spec.k = small_unsigned(k, "pattern length k", 63);
  } else if (name == "zeckendorf") {
    spec.family = Family::Zeckendorf;
  } else if (name == "legendre") {
    spec.family = Family::Legendre;
    spec.p = p.integer("p");
    if (spec.p == 2 || !is_prime(spec.p)) invalid("legendre p must be an odd prime");
    if (const Param* f = p.find("f")) spec.f = parse_poly(f->value, f->pos);
    bool vanishes = true;
    for (const auto& c : spec.f.coefficients()) {
      if (c % spec.p != 0) vanishes = false;
    }
    if (vanishes) invalid("legendre polynomial vanishes mod p");
  } else if (name == "ell") {
    spec.family = Family::Ell;
    spec.q = p.integer("q");
    if (const Param* a = p.find("A")) spec.A = parse_integer(a->value, a->pos);
    if (mpz_even_p(spec.q.get_mpz_t())) invalid("ell modulus q must be odd");
    if (spec.q < 3) invalid("ell modulus q must be >= 3");
    if (spec.A <= 0 || spec.A >= spec.q) invalid("ell needs 0 < A < q");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), spec.A.get_mpz_t(), spec.q.get_mpz_t());
    if (g != 1) invalid("ell needs gcd(A, q) = 1");
  } else if (name == "lfsr") {
    spec.family = Family::Lfsr;
    const BigInt r = p.integer("r");
    if (r < 1) invalid("lfsr degree r must be >= 1");
    spec.lfsr.degree = small_unsigned(r, "lfsr degree r", 4096);
    const Param& taps = p.need("taps");
    std::size_t at = 0;
    while (true) {
      const std::size_t plus = std::min(taps.value.find('+', at), taps.value.size());
      const BigInt t = parse_integer(std::string_view(taps.value).substr(at, plus - at),
                                     taps.pos + at);
      if (t >= r) invalid("lfsr taps must lie in [0, r)");
      spec.lfsr.taps.push_back(static_cast<unsigned>(t.get_ui()));
      if (plus == taps.value.size()) break;
      at = plus + 1;
    }
    const Param& seed = p.need("seed");
    for (std::size_t j = 0; j < seed.value.size(); ++j) {
      if (seed.value[j] != '0' && seed.value[j] != '1') {
        parse_error("seed must be a bit string", seed.pos + j);
      }
    }
    spec.lfsr.seed = Word::from_string(seed.value);
    if (spec.lfsr.seed.size() != spec.lfsr.degree) invalid("lfsr seed length must equal r");
    if (spec.lfsr.seed.count_ones() == 0) invalid("lfsr seed must not be all zero");
  } else if (name == "file") {
    spec.family = Family::File;
    spec.path = p.need("path").value;
    if (spec.path.empty()) invalid("file path is empty");
  } else {
    parse_error("unknown sequence family '" + name + "'", 0);
  }
  p.finish(key_pos);
  if (spec.along && spec.family != Family::Zero && spec.family != Family::Ones &&
      spec.family != Family::Pattern && spec.family != Family::Zeckendorf) {
    invalid("@poly applies to zero, ones, pattern and zeckendorf only");
  }
  return spec;
}

Word materialize(const SeqSpec& spec, std::size_t n) {
  switch (spec.family) {
    case Family::Zero:
    case Family::Ones:
      return Word(n, spec.family == Family::Ones);
    case Family::Pattern: {
      if (!spec.along) return pattern_word(spec.k, n);
      const unsigned k = spec.k;
      return along_polynomial([k](const BigInt& m) { return pattern_bit(k, m); },
                              *spec.along, n);
    }
    case Family::Zeckendorf:
      if (!spec.along) return zeckendorf_word(n);
      return along_polynomial([](const BigInt& m) { return zeckendorf_bit(m); },
                              *spec.along, n);
    case Family::Legendre:
      return legendre_word(spec.p, spec.f, n);
    case Family::Ell:
      return fcsr_word(spec.A, spec.q).unroll(n);
    case Family::Lfsr:
      return lfsr_word(spec.lfsr, n);
    case Family::File: {
      Word w = read_bits_file(spec.path);
      if (n == 0) return w;
      if (n > w.size()) {
        invalid("file holds " + std::to_string(w.size()) + " bits, asked for " +
                std::to_string(n));
      }
      return w.prefix(n);
    }
  }
  invalid("unknown family");
}

std::optional<PeriodicSequence> periodic_of(const SeqSpec& spec) {
  switch (spec.family) {
    case Family::Zero: return PeriodicSequence(Word{0});
    case Family::Ones: return PeriodicSequence(Word{1});
    case Family::Legendre: return legendre_period(spec.p, spec.f);
    case Family::Ell: return fcsr_word(spec.A, spec.q);
    case Family::Lfsr: return lfsr_period(spec.lfsr);
    case Family::File: {
      const Word w = read_bits_file(spec.path);
      if (w.empty()) invalid("empty period file");
      return PeriodicSequence(w);
    }
    default: return std::nullopt;
  }
}

}  // namespace seqlab
