#include "seqlab/adic.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

#include "seqlab/bounds.hpp"
#include "seqlab/error.hpp"

namespace seqlab {

AdicValue AdicValue::of(const BigInt& mu) {
  return {mu, log2_of(mu), seqlab::ceil_log2(mu)};
}

RationalRep connection(const PeriodicSequence& s) {
  const PeriodicSequence least =
      s.least_period() ? s : least_period(s.period_word());
  const BigInt full = pow2(least.period()) - 1;
  const BigInt value = prefix_value(least.period_word());
  BigInt g;
  mpz_gcd(g.get_mpz_t(), full.get_mpz_t(), value.get_mpz_t());
  BigInt A, q;
  mpz_divexact(A.get_mpz_t(), value.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(q.get_mpz_t(), full.get_mpz_t(), g.get_mpz_t());
  return {A, q};
}

AdicValue phi2(const PeriodicSequence& s) {
  return AdicValue::of(connection(s).q);
}

AdicValue phi2_symmetric(const PeriodicSequence& s) {
  const BigInt q = connection(s).q;
  const BigInt q_rev = connection(reverse_period(s)).q;
  return AdicValue::of(q < q_rev ? q : q_rev);
}

namespace {

struct Vec {
  BigInt f;
  BigInt q;
};

BigInt dot(const Vec& a, const Vec& b) { return a.f * b.f + a.q * b.q; }

BigInt sup_norm(const Vec& v) {
  BigInt af = abs(v.f), aq = abs(v.q);
  return af < aq ? aq : af;
}

bool odd(const BigInt& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Lagrange-Gauss reduction in the Euclidean norm; returns {shortest, other}.
std::pair<Vec, Vec> reduce(Vec u, Vec v) {
  BigInt nu = dot(u, u), nv = dot(v, v);
  if (nu > nv) {
    std::swap(u, v);
    std::swap(nu, nv);
  }
  BigInt m, two_nu;
  for (;;) {
    two_nu = 2 * nu;
    // m = round(<u, v> / <u, u>)
    m = floor_div(2 * dot(u, v) + nu, two_nu);
    if (m != 0) {
      v.f -= m * u.f;
      v.q -= m * u.q;
      nv = dot(v, v);
    }
    if (nv >= nu) break;
    std::swap(u, v);
    std::swap(nu, nv);
  }
  return {std::move(u), std::move(v)};
}

// Minimises max(|a1 z + c1|, |a2 z + c2|) over integers z; returns the
// value and a minimiser. The objective is convex and piecewise linear, so a
// minimiser sits at the floor or ceiling of one of its breakpoints.
std::pair<BigInt, BigInt> minimise_line(const BigInt& a1, const BigInt& c1,
                                        const BigInt& a2, const BigInt& c2) {
  auto value = [&](const BigInt& z) {
    BigInt x = abs(a1 * z + c1), y = abs(a2 * z + c2);
    return x < y ? y : x;
  };
  std::vector<std::pair<BigInt, BigInt>> breakpoints;  // num / den, den != 0
  if (a1 != 0) breakpoints.emplace_back(-c1, a1);
  if (a2 != 0) breakpoints.emplace_back(-c2, a2);
  if (a1 - a2 != 0) breakpoints.emplace_back(c2 - c1, a1 - a2);
  if (a1 + a2 != 0) breakpoints.emplace_back(-(c1 + c2), a1 + a2);
  std::optional<std::pair<BigInt, BigInt>> best;
  auto consider = [&](const BigInt& z) {
    BigInt v = value(z);
    if (!best || v < best->first || (v == best->first && z < best->second)) {
      best = std::make_pair(std::move(v), z);
    }
  };
  if (breakpoints.empty()) consider(BigInt(0));
  for (auto& [num, den] : breakpoints) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    consider(floor_div(num, den));
    consider(ceil_div(num, den));
  }
  return *best;
}

// f reduced to the absolutely least residue of f mod 2^n, preferring
// +2^(n-1) on the tie.
BigInt least_residue(const BigInt& f, std::size_t n) {
  BigInt r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), f.get_mpz_t(), n);
  const BigInt half = pow2(n - 1);
  if (r > half) r -= pow2(n);
  return r;
}

}  // namespace

void check_approx_pair(const Word& w, const ApproxPair& pair) {
  if (pair.n == 0 || pair.n > w.size()) {
    throw std::logic_error("approximation pair: bad prefix length");
  }
  if (!odd(pair.q) || pair.q <= 0) {
    throw std::logic_error("approximation pair: q must be odd and positive");
  }
  BigInt diff = pair.q * prefix_value(w.prefix(pair.n)) - pair.f;
  if (!mpz_divisible_2exp_p(diff.get_mpz_t(), pair.n)) {
    throw std::logic_error("approximation pair: congruence fails");
  }
  const BigInt af = abs(pair.f);
  if (pair.mu != (af < pair.q ? pair.q : af) || pair.mu < 1) {
    throw std::logic_error("approximation pair: mu mismatch");
  }
}

ApproxPair adic_min(const Word& w, std::size_t n) {
  if (n == 0 || n > w.size()) {
    throw Error(ErrorCode::InvalidParameter,
                "adic_min needs 1 <= N <= word length");
  }
  const BigInt modulus = pow2(n);
  const BigInt s = prefix_value(w.prefix(n));
  auto [b1, b2] = reduce({s, 1}, {modulus, 0});

  std::optional<Vec> best;
  BigInt best_norm;
  auto offer = [&](Vec v) {
    if (!odd(v.q)) return;
    BigInt norm = sup_norm(v);
    if (!best || norm < best_norm) {
      best_norm = std::move(norm);
      best = std::move(v);
    }
  };
  offer(b1);
  offer(b2);
  offer({b1.f + b2.f, b1.q + b2.q});
  offer({b1.f - b2.f, b1.q - b2.q});
  // (S, 1) itself is admissible, so `best` is always set here.

  const BigInt b1_l1 = abs(b1.f) + abs(b1.q);
  // Candidates for each y: v(x) = x*b1 + y*b2, and +-v are equivalent.
  for (BigInt y = 0; y <= floor_div(b1_l1 * best_norm, modulus); ++y) {
    const BigInt cf = y * b2.f, cq = y * b2.q;
    if (!odd(b1.q)) {
      if (!odd(cq)) continue;  // q parity is fixed for every x
      auto [val, x] = minimise_line(b1.f, cf, b1.q, cq);
      offer({x * b1.f + cf, x * b1.q + cq});
    } else {
      // x must have the parity that makes x*b1.q + cq odd: x = 2z + x0.
      const BigInt x0 = odd(cq) ? 0 : 1;
      auto [val, z] = minimise_line(2 * b1.f, x0 * b1.f + cf, 2 * b1.q,
                                    x0 * b1.q + cq);
      const BigInt x = 2 * z + x0;
      offer({x * b1.f + cf, x * b1.q + cq});
    }
  }

  // Several pairs can share the minimum; report the one with least q. All
  // lattice vectors in the box of radius mu are few and lie on the rows y
  // already bounded above.
  const BigInt& mu = best_norm;
  const BigInt y_max = floor_div(b1_l1 * mu, modulus);
  auto strip = [&](const BigInt& a, const BigInt& c, BigInt& lo, BigInt& hi) {
    // x with |a x + c| <= mu
    if (a == 0) {
      if (abs(c) > mu) hi = lo - 1;
      return;
    }
    BigInt l = a > 0 ? ceil_div(-mu - c, a) : ceil_div(mu - c, a);
    BigInt h = a > 0 ? floor_div(mu - c, a) : floor_div(-mu - c, a);
    if (l > lo) lo = l;
    if (h < hi) hi = h;
  };
  Vec v = *best;
  if (v.q < 0) {
    v.f = -v.f;
    v.q = -v.q;
  }
  for (BigInt y = -y_max; y <= y_max; ++y) {
    const BigInt cf = y * b2.f, cq = y * b2.q;
    BigInt lo = -(mu + abs(cf) + abs(cq)) - 1, hi = -lo;
    strip(b1.f, cf, lo, hi);
    strip(b1.q, cq, lo, hi);
    for (BigInt x = lo; x <= hi; ++x) {
      Vec c{x * b1.f + cf, x * b1.q + cq};
      if (!odd(c.q)) continue;
      if (c.q < 0) {
        c.f = -c.f;
        c.q = -c.q;
      }
      if (c.q < v.q) v = std::move(c);
    }
  }
  const BigInt half = pow2(n - 1);
  if (v.f == -half) v.f = half;
  ApproxPair out{std::move(v.f), std::move(v.q), n, best_norm};
  check_approx_pair(w, out);
  return out;
}

ApproxPair adic_oracle(const Word& w, std::size_t n, std::size_t bound) {
  if (n > bound) {
    throw Error(ErrorCode::OracleBoundExceeded,
                "adic_oracle limited to N <= " + std::to_string(bound));
  }
  if (n == 0 || n > w.size()) {
    throw Error(ErrorCode::InvalidParameter,
                "adic_oracle needs 1 <= N <= word length");
  }
  const BigInt s = prefix_value(w.prefix(n));
  const BigInt limit = pow2(n);
  std::optional<ApproxPair> best;
  for (BigInt q = 1; q < limit; q += 2) {
    BigInt f = least_residue(q * s, n);
    BigInt af = abs(f);
    BigInt mu = af < q ? q : af;
    if (!best || mu < best->mu) best = ApproxPair{f, q, n, mu};
  }
  return *best;
}

ApproxPair adic_oracle(const Word& w, std::size_t n) {
  return adic_oracle(w, n, oracle_bounds().adic);
}

Profile<BigInt> adic_profile(const Word& w) {
  Profile<BigInt> profile;
  for (std::size_t n = 1; n <= w.size(); ++n) profile.push_back(adic_min(w, n).mu);
  return profile;
}

}  // namespace seqlab
