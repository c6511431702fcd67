#pragma once

#include "ggr/quadext.hpp"
#include "ggr/rational.hpp"

#include <functional>
#include <string>
#include <variant>

namespace ggr {

struct Interval {
  Rational lo, hi;
  Interval() : lo(0), hi(0) {}
  Interval(const Rational& l, const Rational& h);
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool disjoint_from(const Interval& o) const { return hi < o.lo || o.hi < lo; }
};

// A real number known either exactly (rational or quadratic surd) or only
// through a rational enclosure.
class BoundedReal {
 public:
  BoundedReal() : v_(Rational(0)) {}
  BoundedReal(const Rational& x) : v_(x) {}
  BoundedReal(const QuadExt& x);  // collapses to Rational when x is rational
  BoundedReal(const Interval& x);  // collapses to Rational when degenerate

  bool is_exact() const { return !std::holds_alternative<Interval>(v_); }
  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const QuadExt& surd() const { return std::get<QuadExt>(v_); }
  const Interval& interval() const { return std::get<Interval>(v_); }

  // Enclosure of width <= eps for exact irrational values; the stored
  // interval (whatever its width) otherwise.
  Interval enclosure(const Rational& eps) const;

  // Three-way order against an exact value; 0 means "not separated", which
  // for two exact values means equal.
  int compare(const QuadExt& x) const;

  double to_double() const;
  std::string decimal(int digits) const;
  // Symbolic form for exact values, empty string for enclosures.
  std::string symbolic() const;

 private:
  std::variant<Rational, QuadExt, Interval> v_;
};

// Max of two values; exact when both are exact, enclosure hull otherwise.
BoundedReal max_of(const BoundedReal& x, const BoundedReal& y, const Rational& eps);

// Sign of a monotone function's root search: f must be nonzero and of
// opposite signs at the bracket ends (a zero end is returned exactly).
// Bisects until width <= tol; a probe hitting the root exactly returns a
// point value.
BoundedReal bisect_sign(const std::function<int(const Rational&)>& f,
                        const Interval& bracket, const Rational& tol);

}  // namespace ggr
