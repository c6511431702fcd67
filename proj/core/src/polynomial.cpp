#include "ggr/polynomial.hpp"

#include <stdexcept>

namespace ggr {

int poly_degree(const Poly& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

Rational poly_eval(const Poly& p, const Rational& q) {
  Rational acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * q + p[i];
  return acc;
}

QuadExt poly_eval(const Poly& p, const QuadExt& q) {
  QuadExt acc(0);
  for (size_t i = p.size(); i-- > 0;) {
    acc *= q;
    acc += QuadExt(p[i]);
  }
  return acc;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_scale(b, Rational(-1))); }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly poly_scale(const Poly& a, const Rational& c) {
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

Poly poly_div_linear(const Poly& p, const Rational& r) {
  // Synthetic division: p(q) = (q - r) * quot(q) + rem; rem must vanish.
  if (p.empty()) return {};
  Poly quot(p.size() > 1 ? p.size() - 1 : 0, Rational(0));
  Rational carry(0);
  for (size_t i = p.size(); i-- > 0;) {
    Rational cur = p[i] + carry;
    if (i == 0) {
      if (cur != 0) throw std::logic_error("poly_div_linear: nonzero remainder");
      break;
    }
    quot[i - 1] = cur;
    carry = cur * r;
  }
  return quot;
}

Poly poly_power_minus_one(size_t t) {
  Poly r(t + 1, Rational(0));
  r[0] = -1;
  r[t] = 1;
  return r;
}

Poly clear_tail_equation(const std::vector<Rational>& u,
                         const std::vector<Rational>& v,
                         const Rational& target) {
  if (v.empty()) throw std::invalid_argument("clear_tail_equation: empty period");
  const size_t s = u.size(), t = v.size();
  // A(q) = sum_{i=1..s} u_i q^{s-i}, B(q) = sum_{i=1..t} v_i q^{t-i}
  Poly A(s ? s : 1, Rational(0));
  for (size_t i = 0; i < s; ++i) A[s - 1 - i] = u[i];
  if (!s) A.clear();
  Poly B(t, Rational(0));
  for (size_t i = 0; i < t; ++i) B[t - 1 - i] = v[i];

  Poly qt1 = poly_power_minus_one(t);
  Poly q1 = {Rational(-1), Rational(1)};
  Poly qs(s + 1, Rational(0));
  qs[s] = 1;

  Poly E = poly_mul(B, q1);
  if (!A.empty()) E = poly_add(E, poly_mul(poly_mul(A, qt1), q1));
  E = poly_sub(E, poly_scale(poly_mul(qs, poly_mul(qt1, q1)), target));

  // The clearing multiplies by q^s (q^t - 1)(q - 1), which vanishes at 1;
  // strip all factors (q - 1) so endpoint signs near 1 are usable.
  while (poly_degree(E) > 0 && poly_eval(E, Rational(1)) == 0)
    E = poly_div_linear(E, Rational(1));
  return E;
}

namespace {

// All real roots of a polynomial of degree <= 2, exactly.
std::vector<QuadExt> low_degree_roots(const Poly& E) {
  int deg = poly_degree(E);
  std::vector<QuadExt> roots;
  if (deg <= 0) return roots;
  if (deg == 1) {
    roots.emplace_back(Rational(-E[0] / E[1]));
    return roots;
  }
  const Rational &a = E[2], &b = E[1], &c = E[0];
  Rational disc = b * b - 4 * a * c;
  if (sgn(disc) < 0) return roots;
  QuadExt sq = QuadExt::sqrt_of(disc);
  QuadExt half(Rational(1) / (2 * a));
  roots.push_back((QuadExt(-b) - sq) * half);
  roots.push_back((QuadExt(-b) + sq) * half);
  return roots;
}

}  // namespace

BoundedReal solve_unique_root(const Poly& E, const Rational& lo,
                              const Rational& hi, const Rational& tol) {
  if (lo >= hi) throw std::invalid_argument("solve_unique_root: empty bracket");
  int deg = poly_degree(E);
  if (deg <= 0) throw std::invalid_argument("solve_unique_root: constant polynomial");

  if (deg <= 2) {
    QuadExt qlo(lo), qhi(hi);
    std::vector<QuadExt> inside;
    for (const QuadExt& r : low_degree_roots(E))
      if (r.compare(qlo) > 0 && r.compare(qhi) <= 0) inside.push_back(r);
    if (inside.size() == 2 && inside[0] == inside[1]) inside.pop_back();
    if (inside.size() != 1)
      throw std::logic_error("solve_unique_root: root count mismatch in (lo, hi]");
    return BoundedReal(inside[0]);
  }

  int shi = sgn(poly_eval(E, hi));
  if (shi == 0) return BoundedReal(hi);

  // Probe small integers inside the bracket; critical-base polynomials hit
  // q = 2 exactly for the power-of-two family.
  for (long k = 2; k <= 4; ++k) {
    Rational qk(k);
    if (lo < qk && qk < hi && poly_eval(E, qk) == 0) return BoundedReal(qk);
  }

  // The root may sit arbitrarily close to lo; walk probe points toward lo
  // geometrically until the sign flips.
  Rational a = lo, b = hi;
  int sa = 0;
  Rational step = (hi - lo) / 2;
  Rational probe = lo + step;
  for (int tries = 0; tries < 128; ++tries) {
    int sp = sgn(poly_eval(E, probe));
    if (sp == 0) return BoundedReal(probe);
    if (sp != shi) {
      a = probe;
      sa = sp;
      break;
    }
    b = probe;  // sign matches hi end: root is below this probe
    step /= 2;
    probe = lo + step;
  }
  if (sa == 0) return BoundedReal(Interval(lo, b));

  while (b - a > tol) {
    Rational mid = (a + b) / 2;
    int sm = sgn(poly_eval(E, mid));
    if (sm == 0) return BoundedReal(mid);
    if (sm == sa)
      a = mid;
    else
      b = mid;
  }
  return BoundedReal(Interval(a, b));
}

}  // namespace ggr
