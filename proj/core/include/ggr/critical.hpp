#pragma once

#include "ggr/expand.hpp"
#include "ggr/interval.hpp"
#include "ggr/polynomial.hpp"
#include "ggr/quadext.hpp"
#include "ggr/rational.hpp"
#include "ggr/words.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ggr {

// All quantities below live on the ternary alphabet {0, 1, m} with m > 1.
// An admissible binary sequence d is mapped to digit words by the
// substitutions
//   delta      = image of d  under 1 -> m,   0 -> 1,
//   delta'     = image of d' under 1 -> m,   0 -> 1   (d' the derived word),
//   bar delta' = m - delta', i.e. image of d' under 1 -> 0, 0 -> m-1.

// Upper bound 1 + sqrt(m/(m-1)) for the critical base; exact surd.
QuadExt big_P(const Rational& m);

struct DeltaPair {
  EpWord delta;
  EpWord delta_prime;
  EpWord delta_bar;  // digitwise m - delta'
};
// Requires a materialized word (throws std::length_error otherwise) and a
// sequence with a derived word (1^inf and unresolved prefixes are rejected).
DeltaPair delta_words(const AdmissibleSeq& d, const Rational& m);

// p'  = unique q > 1 with pi_q(delta)      = m - 1,
// p'' = unique q > 1 with pi_q(bar delta') = 1.
// Exact (rational or quadratic surd) when the cleared polynomial has
// degree <= 2 or a small integer root; an enclosure of width <= tol
// otherwise. p' lies in (1, (2m-1)/(m-1)], p'' in (1, m].
BoundedReal p_prime(const AdmissibleSeq& d, const Rational& m, const Rational& tol);
BoundedReal p_double_prime(const AdmissibleSeq& d, const Rational& m, const Rational& tol);

// The same roots for a sequence given only by its h-parameters (pure
// periodic or ones tail), located by sign bisection of the series value.
// These never materialize the word, so arbitrarily large h_j are fine.
BoundedReal p_prime(const HSpec& hs, const Rational& m, const Rational& tol);
BoundedReal p_double_prime(const HSpec& hs, const Rational& m, const Rational& tol);

// Sign of pi_{P_m}(delta) - (m - 1) for the sequence described by hs,
// computed through the block recursion: per level only the series value and
// scale factor of S(j,1) and S(j,0) are kept, so h_j enters through powers
// (exponents capped at 2^20, std::runtime_error beyond). The sequence d(m)
// selected below is the lexicographically largest admissible d with
// nonpositive sign; the sign is <= 0 exactly when m is at or beyond the
// component of d.
int suitability_sign(const HSpec& hs, const Rational& m);
bool is_suitable(const HSpec& hs, const Rational& m);  // sign <= 0

// Largest H >= 1 such that prefix ++ [H] with a ones tail is suitable at m.
// Requires the H = 1 case suitable and the pure periodic limit unsuitable
// (both hold along the greedy search); exponential-then-binary search.
uint64_t maximize_h(const std::vector<uint64_t>& prefix, const Rational& m);

struct SequenceSearch {
  AdmissibleSeq seq;
  bool resolved = true;
  // Depth-limited only: an interval certain to contain m's component,
  // bracketed by the components of the ones-tail and pure-periodic
  // completions of the deepest explored prefix.
  std::optional<Interval> m_bracket;
};
// Greedy search for the lexicographically largest admissible sequence
// suitable at m. Requires m >= (1+sqrt(5))/2 (throws std::domain_error
// below); callers wanting the classical range should check m >= 2.
SequenceSearch sequence_for_m(const Rational& m, size_t max_depth = 64);

// The parameter interval [m_lo, m_hi) on which d is the selected sequence,
// plus the interior point mu where p' and p'' cross. m_lo solves p' = P,
// m_hi solves p'' = P; for the family d = (1^{k-1} 0)^inf (including 0^inf,
// k = 1) mu = 2^k exactly. Ones-tail sequences get a degenerate interval
// m_lo = mu = m_hi. Solver range is m in [8/5, 65536]; components outside
// it throw std::domain_error.
struct ComponentData {
  BoundedReal m_lo;
  BoundedReal mu;
  BoundedReal m_hi;
};
ComponentData component_interval(const AdmissibleSeq& d, const Rational& tol);

enum class Tristate { No, Yes, DepthLimited };

struct CriticalResult {
  Rational m;
  SequenceSearch search;
  BoundedReal p_prime;
  BoundedReal p_double_prime;
  // Critical base max(p', p''). Depth-limited searches report the interval
  // [max(2, p' of the ones-tail completion), P], and p'/p'' then hold the
  // completion's roots rather than the (unknown) true values.
  BoundedReal p;
  BoundedReal P;  // exact upper bound 1 + sqrt(m/(m-1))
  Tristate in_c = Tristate::No;  // p == P, i.e. m lies on the left edge of its component
};
// Full critical-base record at m. Requires m >= 2 unless allow_small_m,
// which extends the domain down to the golden ratio.
CriticalResult critical_for_m(const Rational& m, const Rational& tol,
                              size_t max_depth = 64, bool allow_small_m = false);

// One CriticalResult per integer m in [m_lo, m_hi].
std::vector<CriticalResult> table_rows(long m_lo, long m_hi, const Rational& tol);

// CriticalResult at m = lo, lo + step, ... while m <= hi (step > 0).
std::vector<CriticalResult> curve_rows(const Rational& lo, const Rational& hi,
                                       const Rational& step, const Rational& tol,
                                       size_t max_depth = 64);

// Critical base data for an arbitrary 3-letter alphabet {a < b < c}: the
// normalized ratio m = max((c-a)/(b-a), (c-a)/(c-b)) is always >= 2, and
// every uniqueness question transfers to {0, 1, m} via affine maps and
// digit conjugation.
CriticalResult ternary_G(const Alphabet& A, const Rational& tol, size_t max_depth = 64);

// Whether p = P at m (m >= 2): Yes and No are exact (resolved searches
// decide the boundary sign in the quadratic extension); DepthLimited when
// the sequence search does not resolve.
Tristate in_cantor(const Rational& m, size_t max_depth = 64);

}  // namespace ggr
