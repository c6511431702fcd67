#pragma once

#include "ggr/interval.hpp"
#include "ggr/quadext.hpp"
#include "ggr/rational.hpp"

#include <vector>

namespace ggr {

// Dense rational polynomial, coefficients in ascending degree order.
using Poly = std::vector<Rational>;

int poly_degree(const Poly& p);  // -1 for the zero polynomial
Rational poly_eval(const Poly& p, const Rational& q);
QuadExt poly_eval(const Poly& p, const QuadExt& q);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);
// Exact division by (q - r); requires p(r) == 0.
Poly poly_div_linear(const Poly& p, const Rational& r);

// q^t - 1.
Poly poly_power_minus_one(size_t t);

// Clears denominators of  sum_i w_i q^{-i}  (i = 1..)  for the eventually
// periodic digit stream with preperiod u (positions 1..s) and period v
// (positions s+1..s+t), minus the constant `target`:
//
//   E(q) = A(q) (q^t - 1) (q - 1) + B(q) (q - 1) - target q^s (q^t - 1) (q - 1)
//
// where A(q) = sum u_i q^{s-i}, B(q) = sum v_i q^{t-i}. E and
// sum w_i q^{-i} - target have the same roots on q > 1, and E(q) has the
// same sign there as that difference. Factors (q - 1) are then stripped
// (E picks up a root at 1 from the clearing), so E(1) != 0 on return.
Poly clear_tail_equation(const std::vector<Rational>& u,
                         const std::vector<Rational>& v,
                         const Rational& target);

// Root of E in the open-closed bracket (lo, hi], for E with exactly one
// root there.
//
// Contract: E(hi) and E at points just above lo have opposite signs, or
// E(hi) == 0 (then hi is returned exactly). Closed forms are used through
// degree 2; otherwise small integer points are probed for exact hits and
// the root is bisected to width <= tol. If no sign change is found down to
// lo + (hi-lo)/2^128 the root is reported as the interval [lo, last probe].
BoundedReal solve_unique_root(const Poly& E, const Rational& lo,
                              const Rational& hi, const Rational& tol);

}  // namespace ggr
