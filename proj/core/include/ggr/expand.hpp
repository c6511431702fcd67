#pragma once

#include "ggr/interval.hpp"
#include "ggr/quadext.hpp"
#include "ggr/rational.hpp"
#include "ggr/words.hpp"

#include <optional>
#include <vector>

namespace ggr {

// Finite digit alphabet a_1 < ... < a_J, J >= 2.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Rational> digits);  // sorts, rejects duplicates

  const std::vector<Rational>& digits() const { return d_; }
  size_t size() const { return d_.size(); }
  const Rational& min() const { return d_.front(); }
  const Rational& max() const { return d_.back(); }
  Rational max_gap() const;
  // Largest base at which every point of [a_1/(q-1), a_J/(q-1)] has an
  // expansion: 1 + (a_J - a_1) / max_gap.
  Rational q_max() const;
  Alphabet conjugate() const;  // digits a_1 + a_J - a_j
  std::optional<size_t> index_of(const Rational& digit) const;

 private:
  std::vector<Rational> d_;
};

// pi_q(w) = sum_{i>=1} w_i q^{-i} in closed form; requires q > 1.
Rational eval_pi(const EpWord& w, const Rational& q);
QuadExt eval_pi(const EpWord& w, const QuadExt& q);

// The two uniqueness condition families: Raise guards against an expansion
// with a larger digit in place of c_n (applies when c_n < a_J), Lower
// against a smaller one (when c_n > a_1).
enum class CondKind { Raise, Lower };

struct Violation {
  size_t position;  // 1-based index n of the offending digit
  CondKind kind;
};

struct ExpansionReport {
  bool unique;
  std::optional<Violation> first_violation;
};

// Uniqueness of the expansion c in base q over A: for every tail,
//   sum (c_{n+i} - a_1) q^{-i} < a_{j+1} - a_j   when c_n = a_j < a_J,
//   sum (a_J - c_{n+i}) q^{-i} < a_j - a_{j-1}   when c_n = a_j > a_1.
// Requires 1 < q <= q_max(A) and digits of c drawn from A.
ExpansionReport is_unique(const EpWord& c, const Rational& q, const Alphabet& A);
ExpansionReport is_unique(const EpWord& c, const QuadExt& q, const Alphabet& A);

// Specialization of the same test to the alphabet {0, 1, m}, written as the
// four ternary inequalities; must agree with is_unique on {0,1,m} words.
ExpansionReport is_unique_ternary(const EpWord& c, const Rational& q, const Rational& m);
ExpansionReport is_unique_ternary(const EpWord& c, const QuadExt& q, const Rational& m);

struct ThresholdDiag {
  size_t position;    // first tail index giving this condition
  Rational digit;     // c at that position
  CondKind kind;
  BoundedReal root;   // base above which the condition holds (clamped to q_max)
};

struct CriticalBase {
  BoundedReal q_c;  // max(1, sup of threshold roots), clamped to [1, q_max]
  std::vector<ThresholdDiag> conditions;  // deduplicated, in first-seen order
  bool clamped;     // some threshold reached q_max
};

// Critical base of a single sequence: the base above which c is unique and
// below which it is not. Each distinct condition contributes the unique
// root of  pi_q(w) = gap  (the left side strictly decreases in q).
CriticalBase critical_base_of_sequence(const EpWord& c, const Alphabet& A,
                                       const Rational& tol);

// Quasi-greedy expansion: the lexicographically largest infinite expansion
// of x in base q. Digitwise: c_n is the largest digit keeping the residual
// strictly above a_1/(q-1). Requires a_1/(q-1) < x <= a_J/(q-1) and
// 1 < q <= q_max(A).
std::vector<Rational> quasi_greedy(const Rational& x, const Rational& q,
                                   const Alphabet& A, size_t n_digits);
std::vector<Rational> quasi_greedy(const QuadExt& x, const QuadExt& q,
                                   const Alphabet& A, size_t n_digits);

// Quasi-lazy expansion: conjugate of the quasi-greedy expansion of
// (a_1 + a_J)/(q-1) - x over the conjugate alphabet. Requires
// a_1/(q-1) <= x < a_J/(q-1).
std::vector<Rational> quasi_lazy(const Rational& x, const Rational& q,
                                 const Alphabet& A, size_t n_digits);
std::vector<Rational> quasi_lazy(const QuadExt& x, const QuadExt& q,
                                 const Alphabet& A, size_t n_digits);

struct EnumerationResult {
  std::vector<std::vector<Rational>> prefixes;
  bool overflow;  // more than cap prefixes exist
};

// All length-`depth` digit prefixes extendable to an expansion of x in base
// q: branch and bound on the residual window a_1/(q-1) <= r <= a_J/(q-1),
// children explored in decreasing digit order (the first prefix found is
// the greedy branch). Exact rational arithmetic throughout.
EnumerationResult enumerate_expansions(const Rational& x, const Rational& q,
                                       const Alphabet& A, size_t depth,
                                       size_t cap);

}  // namespace ggr
