#pragma once

// 2-adic complexity. Periodic: log2 of the connection integer
// q = (2^T - 1) / gcd(2^T - 1, S(2)). Aperiodic (Nth): log2 of the least
// max(|f|, |q|) over odd q with q * S(2) = f (mod 2^N).

#include <cstddef>

#include "seqlab/numtheory.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

// q odd and positive, q * S(2) = f (mod 2^n), mu = max(|f|, q).
struct ApproxPair {
  BigInt f;
  BigInt q;
  std::size_t n = 0;
  BigInt mu;
};

// The integer mu is the ground truth; the logarithm is for display only.
struct AdicValue {
  BigInt mu;
  double log2_value = 0.0;
  std::size_t ceil_log2 = 0;

  static AdicValue of(const BigInt& mu);
};

RationalRep connection(const PeriodicSequence& s);

// Phi_2(S) as an AdicValue over the connection integer.
AdicValue phi2(const PeriodicSequence& s);

// min(Phi_2(S), Phi_2(S^rev)).
AdicValue phi2_symmetric(const PeriodicSequence& s);

// Exact minimum for the first n bits of w (1 <= n <= |w|).
//
// The admissible (f, q) form the lattice spanned by (S mod 2^n, 1) and
// (2^n, 0). After Lagrange reduction (b1 shortest) every vector x*b1 + y*b2
// of sup-norm <= R has |y| <= |b1|_1 * R / 2^n, a handful of values. For
// each y the sup-norm is convex in x, so the best x with q odd is at the
// floor or ceiling of a breakpoint of the piecewise-linear objective.
ApproxPair adic_min(const Word& w, std::size_t n);

// Exhaustive minimum over odd q in [1, 2^n); OracleBoundExceeded past
// `bound` (default from oracle_bounds(), 20).
ApproxPair adic_oracle(const Word& w, std::size_t n, std::size_t bound);
ApproxPair adic_oracle(const Word& w, std::size_t n);

// mu for every prefix length 1..|w|.
Profile<BigInt> adic_profile(const Word& w);

// Throws std::logic_error unless `pair` is a valid witness for w.
void check_approx_pair(const Word& w, const ApproxPair& pair);

}  // namespace seqlab
