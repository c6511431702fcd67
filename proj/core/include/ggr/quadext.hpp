#pragma once

#include "ggr/rational.hpp"

#include <string>

namespace ggr {

// Element a + b*sqrt(D) of a real quadratic extension of Q, with rational
// a, b and integer radicand D >= 0. Normal form: b == 0 iff D == 0 (the
// rational case); otherwise D is a non-square positive integer. A rational
// radicand u/v passed to the constructor is folded into D = u*v, b /= v.
//
// Radicands are not reduced to square-free form, so equal values may carry
// different D (sqrt(8) vs 2*sqrt(2)); equality and ordering handle that by
// comparing trace, norm and branch sign. Ring arithmetic (+, -, *, /)
// requires operands from the same extension: both rational, or equal D.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(0) {}
  QuadExt(const Rational& a) : a_(a), b_(0), d_(0) {}
  QuadExt(long a) : a_(a), b_(0), d_(0) {}
  QuadExt(int a) : a_(a), b_(0), d_(0) {}

  // a + b*sqrt(r) with rational r >= 0.
  QuadExt(const Rational& a, const Rational& b, const Rational& r);

  static QuadExt sqrt_of(const Rational& r) { return QuadExt(0, 1, r); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coeff() const { return b_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  // Requires is_rational().
  const Rational& as_rational() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  QuadExt conj() const { return QuadExt(a_, -b_, d_); }  // a - b*sqrt(D)
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }
  QuadExt inverse() const;
  QuadExt pow(unsigned long e) const;

  int sign() const;
  bool is_zero() const { return b_ == 0 && a_ == 0; }

  // Exact three-way order, valid across different radicands.
  int compare(const QuadExt& o) const;
  bool operator==(const QuadExt& o) const;
  bool operator!=(const QuadExt& o) const { return !(*this == o); }
  bool operator<(const QuadExt& o) const { return compare(o) < 0; }
  bool operator<=(const QuadExt& o) const { return compare(o) <= 0; }
  bool operator>(const QuadExt& o) const { return compare(o) > 0; }
  bool operator>=(const QuadExt& o) const { return compare(o) >= 0; }

  // Rational enclosure lo <= value <= hi with hi - lo <= eps (eps > 0).
  void enclose(const Rational& eps, Rational* lo, Rational* hi) const;

  double to_double() const;
  // Correctly rounded fixed-point rendering (half-even on rationals; an
  // irrational value never sits on a rounding boundary).
  std::string decimal(int digits) const;
  // Canonical exact form: "7/2", "sqrt(6)", "(3+sqrt(33))/4", "2-sqrt(2)".
  std::string symbolic() const;

 private:
  QuadExt(const Rational& a, const Rational& b, const Integer& d)
      : a_(a), b_(b), d_(d) {}
  void collapse();  // restore normal form after constructing with integer D
  void strip_square_factors();

  Rational a_, b_;
  Integer d_;
};

}  // namespace ggr
