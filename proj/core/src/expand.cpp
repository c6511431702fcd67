#include "ggr/expand.hpp"

#include "ggr/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ggr {

Alphabet::Alphabet(std::vector<Rational> digits) : d_(std::move(digits)) {
  if (d_.size() < 2) throw std::invalid_argument("Alphabet: need at least 2 digits");
  std::sort(d_.begin(), d_.end());
  for (size_t i = 1; i < d_.size(); ++i)
    if (d_[i] == d_[i - 1])
      throw std::invalid_argument("Alphabet: duplicate digit");
}

Rational Alphabet::max_gap() const {
  Rational g = d_[1] - d_[0];
  for (size_t i = 2; i < d_.size(); ++i) {
    Rational gi = d_[i] - d_[i - 1];
    if (gi > g) g = gi;
  }
  return g;
}

Rational Alphabet::q_max() const { return 1 + (max() - min()) / max_gap(); }

Alphabet Alphabet::conjugate() const {
  std::vector<Rational> c;
  c.reserve(d_.size());
  Rational s = min() + max();
  for (const auto& a : d_) c.push_back(s - a);
  return Alphabet(std::move(c));
}

std::optional<size_t> Alphabet::index_of(const Rational& digit) const {
  auto it = std::lower_bound(d_.begin(), d_.end(), digit);
  if (it != d_.end() && *it == digit)
    return static_cast<size_t>(it - d_.begin());
  return std::nullopt;
}

namespace {

template <class F>
F fpow(F base, size_t e) {
  F acc(1);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

int sign_of_value(const Rational& x) { return sgn(x); }
int sign_of_value(const QuadExt& x) { return x.sign(); }

template <class F>
F eval_pi_impl(const EpWord& w, const F& q) {
  if (sign_of_value(q - F(1)) <= 0) throw std::domain_error("eval_pi: q <= 1");
  const auto& u = w.preperiod();
  const auto& v = w.period();
  F qinv = F(1) / q;
  F head(0);
  for (size_t i = u.size(); i-- > 0;) head = (head + F(u[i])) * qinv;
  F body(0);
  for (size_t i = v.size(); i-- > 0;) body = (body + F(v[i])) * qinv;
  F qmt = fpow(qinv, v.size());
  return head + fpow(qinv, u.size()) * body / (F(1) - qmt);
}

// Tail words of the two uniqueness conditions, both of the shape
// pi_q(word) < gap with nonnegative digits.
EpWord raise_word(const EpWord& tail, const Alphabet& A) {
  const Rational lo = A.min();
  return tail.map([&](const Rational& d) { return d - lo; });
}

EpWord lower_word(const EpWord& tail, const Alphabet& A) {
  const Rational hi = A.max();
  return tail.map([&](const Rational& d) { return hi - d; });
}

template <class F>
ExpansionReport is_unique_impl(const EpWord& c, const F& q, const Alphabet& A) {
  if (sign_of_value(q - F(1)) <= 0 || sign_of_value(F(A.q_max()) - q) < 0)
    throw std::domain_error("is_unique: base outside (1, q_max]");
  const size_t window = c.preperiod().size() + c.period().size();
  for (size_t n = 1; n <= window; ++n) {
    const Rational& digit = c.at(n - 1);
    auto j = A.index_of(digit);
    if (!j) throw std::invalid_argument("is_unique: digit not in alphabet");
    EpWord tail = c.shifted(n);
    if (*j + 1 < A.size()) {
      F lhs = eval_pi_impl(raise_word(tail, A), q);
      Rational gap = A.digits()[*j + 1] - digit;
      if (sign_of_value(F(gap) - lhs) <= 0)
        return {false, Violation{n, CondKind::Raise}};
    }
    if (*j > 0) {
      F lhs = eval_pi_impl(lower_word(tail, A), q);
      Rational gap = digit - A.digits()[*j - 1];
      if (sign_of_value(F(gap) - lhs) <= 0)
        return {false, Violation{n, CondKind::Lower}};
    }
  }
  return {true, std::nullopt};
}

// Lemma-style ternary form over {0, 1, m}: pi of the raw tail against the
// four explicit bounds.
template <class F>
ExpansionReport is_unique_ternary_impl(const EpWord& c, const F& q, const Rational& m) {
  if (m <= 1) throw std::domain_error("is_unique_ternary: m <= 1");
  const size_t window = c.preperiod().size() + c.period().size();
  F wall = F(m) / (q - F(1));
  for (size_t n = 1; n <= window; ++n) {
    const Rational& digit = c.at(n - 1);
    F tail_pi = eval_pi_impl(c.shifted(n), q);
    if (digit == 0) {
      if (sign_of_value(F(1) - tail_pi) <= 0)
        return {false, Violation{n, CondKind::Raise}};
    } else if (digit == 1) {
      if (sign_of_value(F(m - 1) - tail_pi) <= 0)
        return {false, Violation{n, CondKind::Raise}};
      if (sign_of_value(tail_pi - (wall - F(1))) <= 0)
        return {false, Violation{n, CondKind::Lower}};
    } else if (digit == m) {
      if (sign_of_value(tail_pi - (wall - F(m - 1))) <= 0)
        return {false, Violation{n, CondKind::Lower}};
    } else {
      throw std::invalid_argument("is_unique_ternary: digit not in {0,1,m}");
    }
  }
  return {true, std::nullopt};
}

}  // namespace

Rational eval_pi(const EpWord& w, const Rational& q) { return eval_pi_impl(w, q); }
QuadExt eval_pi(const EpWord& w, const QuadExt& q) { return eval_pi_impl(w, q); }

ExpansionReport is_unique(const EpWord& c, const Rational& q, const Alphabet& A) {
  return is_unique_impl(c, q, A);
}
ExpansionReport is_unique(const EpWord& c, const QuadExt& q, const Alphabet& A) {
  return is_unique_impl(c, q, A);
}
ExpansionReport is_unique_ternary(const EpWord& c, const Rational& q, const Rational& m) {
  return is_unique_ternary_impl(c, q, m);
}
ExpansionReport is_unique_ternary(const EpWord& c, const QuadExt& q, const Rational& m) {
  return is_unique_ternary_impl(c, q, m);
}

CriticalBase critical_base_of_sequence(const EpWord& c, const Alphabet& A,
                                       const Rational& tol) {
  const Rational hi = A.q_max();
  struct Key {
    std::vector<Rational> pre, per;
    Rational gap;
    bool operator<(const Key& o) const {
      if (pre != o.pre) return pre < o.pre;
      if (per != o.per) return per < o.per;
      return gap < o.gap;
    }
  };
  std::map<Key, size_t> seen;
  CriticalBase out{BoundedReal(Rational(1)), {}, false};

  const size_t window = c.preperiod().size() + c.period().size();
  for (size_t n = 1; n <= window; ++n) {
    const Rational& digit = c.at(n - 1);
    auto j = A.index_of(digit);
    if (!j) throw std::invalid_argument("critical_base_of_sequence: digit not in alphabet");
    EpWord tail = c.shifted(n);
    auto add = [&](EpWord w, Rational gap, CondKind kind) {
      if (w == EpWord::constant(0)) return;  // holds for every q > 1
      Key key{w.preperiod(), w.period(), gap};
      if (seen.count(key)) return;
      seen.emplace(std::move(key), out.conditions.size());
      // Threshold: the unique q > 1 with pi_q(w) = gap; pi strictly
      // decreases, so the condition holds exactly for q above the root.
      Poly E = clear_tail_equation(w.preperiod(), w.period(), gap);
      BoundedReal root;
      int at_hi = sgn(poly_eval(E, hi));
      int just_above_one = sgn(poly_eval(E, 1 + (hi - 1) / (1 << 20)));
      if (at_hi == 0)
        root = BoundedReal(hi);
      else if (at_hi == just_above_one) {
        // No crossing inside (1, hi]: the root sits at or beyond q_max
        // whenever the condition still fails at hi.
        QuadExt pi_hi = eval_pi(w, QuadExt(hi));
        if (pi_hi.compare(QuadExt(gap)) >= 0) {
          root = BoundedReal(hi);
          out.clamped = true;
        } else {
          root = BoundedReal(Rational(1));  // holds on all of (1, hi]
        }
      } else {
        root = solve_unique_root(E, Rational(1), hi, tol);
      }
      out.conditions.push_back(ThresholdDiag{n, digit, kind, root});
    };
    if (*j + 1 < A.size())
      add(raise_word(tail, A), A.digits()[*j + 1] - digit, CondKind::Raise);
    if (*j > 0)
      add(lower_word(tail, A), digit - A.digits()[*j - 1], CondKind::Lower);
  }

  BoundedReal best{Rational(1)};
  for (const auto& cond : out.conditions) best = max_of(best, cond.root, tol);
  out.q_c = best;
  return out;
}

namespace {

template <class F>
std::vector<Rational> quasi_greedy_impl(const F& x, const F& q, const Alphabet& A,
                                        size_t n_digits) {
  if (sign_of_value(q - F(1)) <= 0 || sign_of_value(F(A.q_max()) - q) < 0)
    throw std::domain_error("quasi_greedy: base outside (1, q_max]");
  F lo_wall = F(A.min()) / (q - F(1));
  F hi_wall = F(A.max()) / (q - F(1));
  if (sign_of_value(x - lo_wall) <= 0 || sign_of_value(hi_wall - x) < 0)
    throw std::domain_error("quasi_greedy: x outside (a_1/(q-1), a_J/(q-1)]");
  std::vector<Rational> out;
  out.reserve(n_digits);
  F r = x;
  for (size_t n = 0; n < n_digits; ++n) {
    // Largest digit keeping the residual strictly above the lower wall,
    // so that a further infinite expansion always remains possible.
    const auto& ds = A.digits();
    size_t pick = ds.size();
    for (size_t k = ds.size(); k-- > 0;) {
      if (sign_of_value(q * r - F(ds[k]) - lo_wall) > 0) {
        pick = k;
        break;
      }
    }
    if (pick == ds.size())
      throw std::logic_error("quasi_greedy: no digit available");  // unreachable
    r = q * r - F(ds[pick]);
    out.push_back(ds[pick]);
  }
  return out;
}

template <class F>
std::vector<Rational> quasi_lazy_impl(const F& x, const F& q, const Alphabet& A,
                                      size_t n_digits) {
  F lo_wall = F(A.min()) / (q - F(1));
  F hi_wall = F(A.max()) / (q - F(1));
  if (sign_of_value(x - lo_wall) < 0 || sign_of_value(hi_wall - x) <= 0)
    throw std::domain_error("quasi_lazy: x outside [a_1/(q-1), a_J/(q-1))");
  F mirror = lo_wall + hi_wall - x;
  std::vector<Rational> conj = quasi_greedy_impl(mirror, q, A.conjugate(), n_digits);
  Rational s = A.min() + A.max();
  for (auto& d : conj) d = s - d;
  return conj;
}

}  // namespace

std::vector<Rational> quasi_greedy(const Rational& x, const Rational& q,
                                   const Alphabet& A, size_t n_digits) {
  return quasi_greedy_impl(x, q, A, n_digits);
}
std::vector<Rational> quasi_greedy(const QuadExt& x, const QuadExt& q,
                                   const Alphabet& A, size_t n_digits) {
  return quasi_greedy_impl(x, q, A, n_digits);
}
std::vector<Rational> quasi_lazy(const Rational& x, const Rational& q,
                                 const Alphabet& A, size_t n_digits) {
  return quasi_lazy_impl(x, q, A, n_digits);
}
std::vector<Rational> quasi_lazy(const QuadExt& x, const QuadExt& q,
                                 const Alphabet& A, size_t n_digits) {
  return quasi_lazy_impl(x, q, A, n_digits);
}

namespace {

void enumerate_rec(const Rational& r, const Rational& q, const Alphabet& A,
                   const Rational& lo_wall, const Rational& hi_wall,
                   size_t depth, std::vector<Rational>& prefix,
                   EnumerationResult& out, size_t cap) {
  if (depth == 0) {
    if (out.prefixes.size() == cap) {
      out.overflow = true;
      return;
    }
    out.prefixes.push_back(prefix);
    return;
  }
  const auto& ds = A.digits();
  for (size_t k = ds.size(); k-- > 0;) {
    if (out.overflow) return;
    Rational next = q * r - ds[k];
    if (next < lo_wall || next > hi_wall) continue;
    prefix.push_back(ds[k]);
    enumerate_rec(next, q, A, lo_wall, hi_wall, depth - 1, prefix, out, cap);
    prefix.pop_back();
  }
}

}  // namespace

EnumerationResult enumerate_expansions(const Rational& x, const Rational& q,
                                       const Alphabet& A, size_t depth,
                                       size_t cap) {
  if (depth < 1 || cap < 1)
    throw std::invalid_argument("enumerate_expansions: depth and cap must be >= 1");
  if (q <= 1) throw std::domain_error("enumerate_expansions: q <= 1");
  EnumerationResult out{{}, false};
  Rational lo_wall = A.min() / (q - 1);
  Rational hi_wall = A.max() / (q - 1);
  if (x < lo_wall || x > hi_wall) return out;
  std::vector<Rational> prefix;
  enumerate_rec(x, q, A, lo_wall, hi_wall, depth, prefix, out, cap);
  return out;
}

}  // namespace ggr
