#include "ggr/critical.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace ggr {
namespace {

constexpr uint64_t kExponentGuard = uint64_t(1) << 20;

template <class F>
F fpow(F base, uint64_t e) {
  F out(1);
  while (e != 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

int cmp3(const Rational& a, const Rational& b) {
  return a > b ? 1 : (a < b ? -1 : 0);
}

// Series value v = pi_q(u) and scale s = q^{-|u|} of one digit block u.
// Concatenation is v(uw) = v(u) + s(u) v(w); a power u^e is a geometric sum.
template <class F>
struct BlockVS {
  F v, s;
};

template <class F>
BlockVS<F> block_pow(const BlockVS<F>& u, uint64_t e) {
  if (e > kExponentGuard)
    throw std::runtime_error("critical: h exponent exceeds the 2^20 guard");
  if (e == 0) return {F(0), F(1)};
  F se = fpow(u.s, e);
  return {u.v * (F(1) - se) / (F(1) - u.s), se};
}

template <class F>
BlockVS<F> block_cat(const BlockVS<F>& a, const BlockVS<F>& b) {
  return {a.v + a.s * b.v, a.s * b.s};
}

// pi_q of the word described by hs after the substitution 1 -> hi_digit,
// 0 -> lo_digit, evaluated through the block recursion
//   S(j,1) = S(j-1,1)^{h_j} S(j-1,0),  S(j,0) = S(j-1,1)^{h_j-1} S(j-1,0),
// so only per-level values and scales are kept and large h_j cost only a
// power. Requires q > 1 (qinv = 1/q).
template <class F>
F block_pi(const HSpec& hs, const F& hi_digit, const F& lo_digit, const F& qinv) {
  BlockVS<F> one{hi_digit * qinv, qinv};   // S(0,1) = "1"
  BlockVS<F> zero{lo_digit * qinv, qinv};  // S(0,0) = "0"
  for (uint64_t hj : hs.h) {
    if (hj == 0) throw std::invalid_argument("critical: h entries must be >= 1");
    BlockVS<F> next_one = block_cat(block_pow(one, hj), zero);
    BlockVS<F> next_zero = block_cat(block_pow(one, hj - 1), zero);
    one = next_one;
    zero = next_zero;
  }
  switch (hs.tail) {
    case Tail::PurePeriodic:  // S(N,1)^inf
      return one.v / (F(1) - one.s);
    case Tail::OnesTail:  // S(N,1) S(N,0)^inf
      return one.v + one.s * (zero.v / (F(1) - zero.s));
    default:
      throw std::invalid_argument("critical: a bare prefix has no series value");
  }
}

// Sign of pi_{P_m}(delta) - (m - 1) for a resolved search result.
int resolved_gap_sign(const AdmissibleSeq& seq, const Rational& m) {
  if (seq.kind == SeqKind::Zero) {
    QuadExt P = big_P(m);
    return (QuadExt(1) / (P - QuadExt(1)) - QuadExt(m - 1)).sign();
  }
  return suitability_sign(seq.hs, m);
}

}  // namespace

QuadExt big_P(const Rational& m) {
  if (m <= 1) throw std::domain_error("big_P: requires m > 1");
  return QuadExt(1) + QuadExt::sqrt_of(m / (m - 1));
}

DeltaPair delta_words(const AdmissibleSeq& d, const Rational& m) {
  if (m <= 1) throw std::domain_error("delta_words: requires m > 1");
  if (!d.word)
    throw std::length_error("delta_words: word exceeds the materialization cap");
  EpWord dp = derived(d);
  auto sub = [&](const Rational& t) { return t == 1 ? m : Rational(1); };
  auto sub_bar = [&](const Rational& t) { return t == 1 ? Rational(0) : m - 1; };
  return DeltaPair{d.word->map(sub), dp.map(sub), dp.map(sub_bar)};
}

BoundedReal p_prime(const AdmissibleSeq& d, const Rational& m, const Rational& tol) {
  DeltaPair dp = delta_words(d, m);
  Poly E = clear_tail_equation(dp.delta.preperiod(), dp.delta.period(), m - 1);
  return solve_unique_root(E, Rational(1), (2 * m - 1) / (m - 1), tol);
}

BoundedReal p_double_prime(const AdmissibleSeq& d, const Rational& m, const Rational& tol) {
  DeltaPair dp = delta_words(d, m);
  Poly E = clear_tail_equation(dp.delta_bar.preperiod(), dp.delta_bar.period(),
                               Rational(1));
  return solve_unique_root(E, Rational(1), m, tol);
}

BoundedReal p_prime(const HSpec& hs, const Rational& m, const Rational& tol) {
  if (m <= 1) throw std::domain_error("p_prime: requires m > 1");
  Rational target = m - 1;
  auto sign_at = [&](const Rational& q) {
    return cmp3(block_pi<Rational>(hs, m, Rational(1), Rational(1) / q), target);
  };
  Interval bracket(Rational(1) + Rational(1, 1000000000), (2 * m - 1) / (m - 1));
  return bisect_sign(sign_at, bracket, tol);
}

BoundedReal p_double_prime(const HSpec& hs, const Rational& m, const Rational& tol) {
  if (m <= 1) throw std::domain_error("p_double_prime: requires m > 1");
  if (hs.tail != Tail::OnesTail)
    throw std::invalid_argument(
        "p_double_prime: the series shortcut needs a ones-tail spec");
  auto sign_at = [&](const Rational& q) {
    // The derived word of a ones-tail sequence is its one-step shift, so
    //   pi_q(delta')     = 1/(q-1) + (m-1) (q pi_q(d) - 1),
    //   pi_q(bar delta') = m/(q-1) - pi_q(delta').
    Rational B = block_pi<Rational>(hs, Rational(1), Rational(0), Rational(1) / q);
    Rational v = m / (q - 1) - (Rational(1) / (q - 1) + (m - 1) * (q * B - 1));
    return cmp3(v, Rational(1));
  };
  Interval bracket(Rational(1) + Rational(1, 1000000000), m);
  return bisect_sign(sign_at, bracket, tol);
}

int suitability_sign(const HSpec& hs, const Rational& m) {
  if (m <= 1) throw std::domain_error("suitability_sign: requires m > 1");
  QuadExt P = big_P(m);
  QuadExt val = block_pi<QuadExt>(hs, QuadExt(m), QuadExt(1), P.inverse());
  return (val - QuadExt(m - 1)).sign();
}

bool is_suitable(const HSpec& hs, const Rational& m) {
  return suitability_sign(hs, m) <= 0;
}

uint64_t maximize_h(const std::vector<uint64_t>& prefix, const Rational& m) {
  auto suitable_at = [&](uint64_t H) {
    std::vector<uint64_t> h = prefix;
    h.push_back(H);
    return is_suitable(HSpec{std::move(h), Tail::OnesTail}, m);
  };
  if (!suitable_at(1)) throw std::logic_error("maximize_h: H = 1 must be suitable");
  uint64_t lo = 1, hi = 2;
  while (suitable_at(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > kExponentGuard)
      throw std::runtime_error("maximize_h: h exceeds the 2^20 growth guard");
  }
  while (hi - lo > 1) {
    uint64_t mid = lo + (hi - lo) / 2;
    (suitable_at(mid) ? lo : hi) = mid;
  }
  return lo;
}

SequenceSearch sequence_for_m(const Rational& m, size_t max_depth) {
  if (m * m - m - 1 < 0)
    throw std::domain_error("sequence_for_m: no sequence below the golden ratio");
  SequenceSearch out;
  if (!is_suitable(HSpec{{}, Tail::OnesTail}, m)) {
    out.seq = AdmissibleSeq::zero();
    return out;
  }
  std::vector<uint64_t> h;
  for (size_t depth = 0; depth < max_depth; ++depth) {
    // The pure periodic completion bounds every extension of h from above;
    // once it is suitable the greedy choice is settled and d is finite type.
    if (!h.empty() && is_suitable(HSpec{h, Tail::PurePeriodic}, m)) {
      out.seq = AdmissibleSeq::finite(h);
      return out;
    }
    h.push_back(maximize_h(h, m));
  }
  // Depth exhausted. The true component of m is trapped between the
  // components of the explored prefix's two completions: the ones-tail
  // completion is suitable at m, the pure periodic one is not.
  HSpec ot{h, Tail::OnesTail};
  HSpec pp{h, Tail::PurePeriodic};
  const Rational bracket_tol(1, 1000000000);
  auto ot_sign = [&](const Rational& x) { return suitability_sign(ot, x); };
  auto pp_sign = [&](const Rational& x) { return suitability_sign(pp, x); };
  BoundedReal lo = bisect_sign(ot_sign, Interval(Rational(8, 5), m), bracket_tol);
  BoundedReal hi = bisect_sign(pp_sign, Interval(m, Rational(65536)), bracket_tol);
  out.seq = AdmissibleSeq::prefix_only(std::move(h));
  out.resolved = false;
  out.m_bracket =
      Interval(lo.enclosure(bracket_tol).lo, hi.enclosure(bracket_tol).hi);
  return out;
}

ComponentData component_interval(const AdmissibleSeq& d, const Rational& tol) {
  if (d.kind == SeqKind::InfinitePrefix)
    throw std::invalid_argument("component_interval: unresolved prefix");
  if (d.is_all_ones())
    throw std::invalid_argument("component_interval: 1^inf bounds no component");
  const Interval solver_range(Rational(8, 5), Rational(65536));
  auto bracketed = [&](const std::function<int(const Rational&)>& f,
                       const Interval& br) -> BoundedReal {
    try {
      return bisect_sign(f, br, tol);
    } catch (const std::invalid_argument&) {
      throw std::domain_error(
          "component_interval: component outside the solver range [8/5, 65536]");
    }
  };

  ComponentData out;
  if (d.kind == SeqKind::Zero) {
    // p' = P at the golden ratio; p'' = m here, so p'' = P becomes the
    // cubic (m-1)^3 = m; the crossing p' = p'' sits at m = 2.
    out.m_lo = BoundedReal(QuadExt(Rational(1, 2), Rational(1, 2), Rational(5)));
    out.mu = BoundedReal(Rational(2));
    auto cubic = [](const Rational& x) {
      Rational t = x - 1;
      return cmp3(t * t * t, x);
    };
    out.m_hi = bracketed(cubic, Interval(Rational(2), solver_range.hi));
    return out;
  }

  if (!d.word)
    throw std::length_error("component_interval: word exceeds the materialization cap");
  const EpWord& w = *d.word;
  EpWord dpw = derived(d);
  auto gap_lo = [&](const Rational& x) {  // sign of p'(x) - P(x), decreasing
    QuadExt P = big_P(x);
    EpWord delta = w.map([&](const Rational& t) { return t == 1 ? x : Rational(1); });
    return (eval_pi(delta, P) - QuadExt(x - 1)).sign();
  };
  auto gap_hi = [&](const Rational& x) {  // sign of p''(x) - P(x), increasing
    QuadExt P = big_P(x);
    EpWord bar = dpw.map([&](const Rational& t) { return t == 1 ? Rational(0) : x - 1; });
    return (eval_pi(bar, P) - QuadExt(1)).sign();
  };

  if (d.kind == SeqKind::InfiniteResolved) {
    // Ones-tail sequences occupy a single parameter value.
    out.m_lo = out.mu = out.m_hi = bracketed(gap_lo, solver_range);
    return out;
  }

  out.m_lo = bracketed(gap_lo, solver_range);
  out.m_hi = bracketed(gap_hi, solver_range);

  const auto& h = d.hs.h;
  if (h.size() == 1) {
    // d = (1^{h_1} 0)^inf: both roots coincide exactly at m = 2^{h_1 + 1},
    // where p' = p'' = 2.
    out.mu = BoundedReal(Rational(Integer(1) << (h[0] + 1)));
    return out;
  }

  // General crossing p' = p'': decide the side at x by evaluating the
  // bar-delta' series at q = p'(x); the series decreases in q, so a value
  // above 1 means p'' > p'. Enclosure endpoints are tightened until they
  // agree on the sign.
  auto mu_sign = [&](const Rational& x) -> int {
    EpWord bar = dpw.map([&](const Rational& t) { return t == 1 ? Rational(0) : x - 1; });
    Rational t = tol;
    for (int round = 0; round < 6; ++round) {
      BoundedReal root = p_prime(d, x, t);
      if (root.is_rational()) return cmp3(eval_pi(bar, root.rational()), Rational(1));
      if (root.is_exact()) return (eval_pi(bar, root.surd()) - QuadExt(1)).sign();
      const Interval& e = root.interval();
      int s_lo = cmp3(eval_pi(bar, e.lo), Rational(1));
      int s_hi = cmp3(eval_pi(bar, e.hi), Rational(1));
      if (s_lo == s_hi) return s_lo;
      t /= 1000000;
    }
    return 0;  // unseparated to extreme precision: take x as the crossing
  };
  Rational a = out.m_lo.enclosure(tol).hi;
  Rational b = out.m_hi.enclosure(tol).lo;
  out.mu = bracketed(mu_sign, Interval(a, b));
  return out;
}

CriticalResult critical_for_m(const Rational& m, const Rational& tol,
                              size_t max_depth, bool allow_small_m) {
  if (!allow_small_m && m < 2)
    throw std::domain_error("critical_for_m: m < 2 (allow_small_m extends the domain)");
  CriticalResult r;
  r.m = m;
  r.P = BoundedReal(big_P(m));
  r.search = sequence_for_m(m, max_depth);
  if (r.search.resolved) {
    r.p_prime = ggr::p_prime(r.search.seq, m, tol);
    r.p_double_prime = ggr::p_double_prime(r.search.seq, m, tol);
    r.p = max_of(r.p_prime, r.p_double_prime, tol);
    r.in_c = resolved_gap_sign(r.search.seq, m) == 0 ? Tristate::Yes : Tristate::No;
  } else {
    HSpec ot{r.search.seq.hs.h, Tail::OnesTail};
    r.p_prime = ggr::p_prime(ot, m, tol);
    r.p_double_prime = ggr::p_double_prime(ot, m, tol);
    // Brackets for the true critical base: the ones-tail completion is a
    // lexicographically smaller sequence, so its p' bounds the true p'
    // from below (digit order transfers to series order for q >= 2, and
    // p >= 2 always); its suitability at m gives p' <= P. The completion's
    // p'' carries no such bound, hence the clamp at 2.
    Rational lower = r.p_prime.enclosure(tol).lo;
    if (lower < 2) lower = 2;
    r.p = BoundedReal(Interval(lower, r.P.enclosure(tol).hi));
    r.in_c = Tristate::DepthLimited;
  }
  return r;
}

std::vector<CriticalResult> table_rows(long m_lo, long m_hi, const Rational& tol) {
  if (m_lo < 2) throw std::domain_error("table_rows: requires m >= 2");
  std::vector<CriticalResult> out;
  for (long v = m_lo; v <= m_hi; ++v)
    out.push_back(critical_for_m(Rational(v), tol));
  return out;
}

std::vector<CriticalResult> curve_rows(const Rational& lo, const Rational& hi,
                                       const Rational& step, const Rational& tol,
                                       size_t max_depth) {
  if (sgn(step) <= 0) throw std::invalid_argument("curve_rows: step must be positive");
  std::vector<CriticalResult> out;
  for (Rational x = lo; x <= hi; x += step)
    out.push_back(critical_for_m(x, tol, max_depth, /*allow_small_m=*/true));
  return out;
}

CriticalResult ternary_G(const Alphabet& A, const Rational& tol, size_t max_depth) {
  if (A.size() != 3)
    throw std::invalid_argument("ternary_G: alphabet must have exactly 3 letters");
  const auto& dg = A.digits();
  Rational r1 = (dg[2] - dg[0]) / (dg[1] - dg[0]);
  Rational r2 = (dg[2] - dg[0]) / (dg[2] - dg[1]);
  Rational m = r1 > r2 ? r1 : r2;
  // 1/r1 + 1/r2 = 1, so the larger ratio is always >= 2.
  assert(m >= 2);
  return critical_for_m(m, tol, max_depth, false);
}

Tristate in_cantor(const Rational& m, size_t max_depth) {
  if (m < 2) throw std::domain_error("in_cantor: requires m >= 2");
  SequenceSearch s = sequence_for_m(m, max_depth);
  if (!s.resolved) return Tristate::DepthLimited;
  return resolved_gap_sign(s.seq, m) == 0 ? Tristate::Yes : Tristate::No;
}

}  // namespace ggr
