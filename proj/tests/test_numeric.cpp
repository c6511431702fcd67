#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggr/interval.hpp"
#include "ggr/polynomial.hpp"
#include "ggr/quadext.hpp"
#include "ggr/rational.hpp"

#include <random>

using namespace ggr;

TEST_CASE("rational parsing accepts integers, fractions and decimals") {
  CHECK(*parse_rational("12") == Rational(12));
  CHECK(*parse_rational("-7/3") == Rational(-7, 3));
  CHECK(*parse_rational("2.186") == Rational(1093, 500));
  CHECK(*parse_rational("0.5") == Rational(1, 2));
  CHECK(*parse_rational("-0.25") == Rational(-1, 4));
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK(!parse_rational(""));
  CHECK(!parse_rational("3."));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("2.1.3"));
  CHECK(!parse_rational("x"));
  CHECK(!parse_rational(" 2"));
  CHECK(!parse_rational("2 "));
  CHECK(!parse_rational("1/-2"));
  CHECK(!parse_rational("."));
}

TEST_CASE("fixed-point rendering rounds half to even") {
  CHECK(decimal_string(Rational(1, 8), 2) == "0.12");
  CHECK(decimal_string(Rational(3, 8), 2) == "0.38");
  CHECK(decimal_string(Rational(-1, 8), 2) == "-0.12");
  CHECK(decimal_string(Rational(5), 0) == "5");
  CHECK(decimal_string(Rational(1, 3), 6) == "0.333333");
  CHECK(decimal_string(Rational(2, 3), 6) == "0.666667");
}

TEST_CASE("integer powers of rationals") {
  CHECK(pow_rational(Rational(3, 2), 3) == Rational(27, 8));
  CHECK(pow_rational(Rational(3, 2), 0) == Rational(1));
  CHECK(pow_rational(Rational(3, 2), -2) == Rational(4, 9));
}

TEST_CASE("floor of the base-2 logarithm") {
  CHECK(floor_log2(Integer(1)) == 0);
  CHECK(floor_log2(Integer(2)) == 1);
  CHECK(floor_log2(Integer(3)) == 1);
  CHECK(floor_log2(Integer(4)) == 2);
  CHECK(floor_log2(Integer(1) << 20) == 20);
}

TEST_CASE("rational square roots are detected exactly") {
  Rational r;
  CHECK(rational_sqrt(Rational(4, 9), &r));
  CHECK(r == Rational(2, 3));
  CHECK(!rational_sqrt(Rational(2), &r));
  CHECK(!rational_sqrt(Rational(1, 3), &r));
}

TEST_CASE("square radicands collapse to rationals") {
  QuadExt x = QuadExt::sqrt_of(Rational(9, 4));
  CHECK(x.is_rational());
  CHECK(x.as_rational() == Rational(3, 2));
  CHECK(QuadExt::sqrt_of(Rational(0)).is_rational());
}

TEST_CASE("quadratic arithmetic satisfies field identities") {
  QuadExt s2 = QuadExt::sqrt_of(Rational(2));
  CHECK((QuadExt(1) + s2) * (QuadExt(1) - s2) == QuadExt(-1));
  CHECK(s2 * s2 == QuadExt(2));
  QuadExt x = QuadExt(3, 1, Rational(5));  // 3 + sqrt(5)
  CHECK(x * x.inverse() == QuadExt(1));
  CHECK(x + x.conj() == QuadExt(6));
  CHECK(x * x.conj() == QuadExt(x.norm()));
  CHECK(x.pow(3) == x * x * x);
}

TEST_CASE("comparison separates values across different radicands") {
  QuadExt s2 = QuadExt::sqrt_of(Rational(2));
  // 99/70 is a convergent just above sqrt(2): 99^2 = 9801 > 9800 = 2*70^2.
  CHECK(s2.compare(QuadExt(Rational(99, 70))) < 0);
  CHECK(s2.compare(QuadExt(Rational(140, 99))) > 0);
  // sqrt(8) written two ways.
  CHECK(QuadExt::sqrt_of(Rational(8)) == QuadExt(0, 2, Rational(2)));
  CHECK(QuadExt::sqrt_of(Rational(2)) < QuadExt::sqrt_of(Rational(3)));
}

TEST_CASE("quadratic values render symbolically and in decimal") {
  QuadExt golden = (QuadExt(1) + QuadExt::sqrt_of(Rational(5))) / QuadExt(2);
  CHECK(golden.symbolic() == "(1+sqrt(5))/2");
  CHECK(golden.decimal(6) == "1.618034");
  CHECK(QuadExt::sqrt_of(Rational(3)).symbolic() == "sqrt(3)");
  CHECK(QuadExt(Rational(7, 2)).symbolic() == "7/2");
  CHECK((QuadExt(2) - QuadExt::sqrt_of(Rational(2))).symbolic() == "2-sqrt(2)");
  CHECK(QuadExt(2).decimal(3) == "2.000");
}

TEST_CASE("enclosures shrink to the requested width") {
  QuadExt s2 = QuadExt::sqrt_of(Rational(2));
  Rational lo, hi;
  s2.enclose(Rational(1, 1000000), &lo, &hi);
  CHECK(hi - lo <= Rational(1, 1000000));
  CHECK(lo * lo <= 2);
  CHECK(hi * hi >= 2);
}

TEST_CASE("bounded reals keep exact values exact") {
  BoundedReal x(QuadExt::sqrt_of(Rational(4)));  // collapses to 2
  CHECK(x.is_rational());
  CHECK(x.rational() == Rational(2));
  BoundedReal y(Interval(Rational(3), Rational(3)));  // degenerate
  CHECK(y.is_rational());
  BoundedReal z(QuadExt::sqrt_of(Rational(3)));
  CHECK(z.is_exact());
  CHECK(!z.is_rational());
  CHECK(z.compare(QuadExt::sqrt_of(Rational(3))) == 0);
}

TEST_CASE("max of bounded reals prefers the larger exact value") {
  BoundedReal a(Rational(2));
  BoundedReal b(QuadExt::sqrt_of(Rational(5)));
  BoundedReal m = max_of(a, b, Rational(1, 1000));
  CHECK(m.is_exact());
  CHECK(m.compare(QuadExt::sqrt_of(Rational(5))) == 0);
}

TEST_CASE("sign bisection returns exact hits and tight enclosures") {
  // f(q) = q^2 - 2, decreasing sign convention handled by the caller.
  auto f = [](const Rational& q) { return sgn(q * q - 2); };
  BoundedReal root = bisect_sign(f, Interval(Rational(1), Rational(2)),
                                 Rational(1, 1 << 20));
  CHECK(!root.is_exact());
  Interval e = root.enclosure(Rational(1, 1 << 20));
  CHECK(e.lo * e.lo <= 2);
  CHECK(e.hi * e.hi >= 2);

  auto g = [](const Rational& q) { return sgn(q - Rational(3, 2)); };
  BoundedReal hit = bisect_sign(g, Interval(Rational(1), Rational(2)),
                                Rational(1, 1024));
  CHECK(hit.is_rational());
  CHECK(hit.rational() == Rational(3, 2));
}

TEST_CASE("polynomial arithmetic and division") {
  Poly p = {Rational(-2), Rational(0), Rational(1)};  // q^2 - 2
  CHECK(poly_degree(p) == 2);
  CHECK(poly_eval(p, Rational(2)) == Rational(2));
  QuadExt s2 = QuadExt::sqrt_of(Rational(2));
  CHECK(poly_eval(p, s2).is_zero());
  Poly q = poly_mul(p, p);
  CHECK(poly_degree(q) == 4);
  CHECK(poly_eval(q, Rational(3)) == Rational(49));
  Poly lin = {Rational(-1), Rational(1)};  // q - 1
  Poly prod = poly_mul(lin, p);
  CHECK(poly_div_linear(prod, Rational(1)) == p);
}

TEST_CASE("cleared series equations match direct evaluation in sign") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> digit(0, 3), len(1, 4), qnum(11, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> pre(len(rng) - 1), per(len(rng));
    for (auto& d : pre) d = digit(rng);
    for (auto& d : per) d = digit(rng);
    Rational target(digit(rng) + 1);
    Poly E = clear_tail_equation(pre, per, target);
    Rational q(qnum(rng), 10);  // q in (1, 4]
    // Direct series value: sum w_i q^{-i} with the periodic tail summed.
    Rational s = 0, scale = 1;
    for (const auto& d : pre) {
      scale /= q;
      s += d * scale;
    }
    Rational tailv = 0, ts = 1;
    for (const auto& d : per) {
      ts /= q;
      tailv += d * ts;
    }
    Rational t = pow_rational(q, (long)per.size());
    s += scale * tailv * t / (t - 1);
    CHECK(sgn(poly_eval(E, q)) == sgn(s - target));
  }
}

TEST_CASE("unique-root solver finds quadratic roots exactly") {
  // pi_q((3 1)^inf) = 2 over {0,1,3}: root (3+sqrt(33))/4.
  Poly E = clear_tail_equation({}, {Rational(3), Rational(1)}, Rational(2));
  BoundedReal r = solve_unique_root(E, Rational(1), Rational(4), Rational(1, 1 << 30));
  CHECK(r.is_exact());
  QuadExt expected = (QuadExt(3) + QuadExt::sqrt_of(Rational(33))) / QuadExt(4);
  CHECK(r.compare(expected) == 0);
}

TEST_CASE("unique-root solver detects small integer roots of high degree") {
  // pi_q((m^5 1)^inf) = m - 1 at m = 64 has the exact root q = 2.
  std::vector<Rational> per(6, Rational(64));
  per.back() = 1;
  Poly E = clear_tail_equation({}, per, Rational(63));
  BoundedReal r = solve_unique_root(E, Rational(1), Rational(4), Rational(1, 1 << 30));
  CHECK(r.is_rational());
  CHECK(r.rational() == Rational(2));
}

TEST_CASE("intervals validate their endpoints") {
  CHECK_THROWS_AS(Interval(Rational(2), Rational(1)), std::invalid_argument);
  Interval i(Rational(1), Rational(2));
  CHECK(i.width() == Rational(1));
  CHECK(i.mid() == Rational(3, 2));
  CHECK(i.contains(Rational(3, 2)));
  CHECK(!i.contains(Rational(3)));
  CHECK(i.disjoint_from(Interval(Rational(3), Rational(4))));
  CHECK(!i.disjoint_from(Interval(Rational(2), Rational(4))));
}
