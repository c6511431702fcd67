#include "ggr/interval.hpp"

#include <stdexcept>

namespace ggr {

Interval::Interval(const Rational& l, const Rational& h) : lo(l), hi(h) {
  if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
}

BoundedReal::BoundedReal(const QuadExt& x) : v_(Rational(0)) {
  if (x.is_rational())
    v_ = x.as_rational();
  else
    v_ = x;
}

BoundedReal::BoundedReal(const Interval& x) : v_(Rational(0)) {
  if (x.is_point())
    v_ = x.lo;
  else
    v_ = x;
}

Interval BoundedReal::enclosure(const Rational& eps) const {
  if (is_rational()) return Interval(rational(), rational());
  if (is_exact()) {
    Rational lo, hi;
    surd().enclose(eps, &lo, &hi);
    return Interval(lo, hi);
  }
  return interval();
}

int BoundedReal::compare(const QuadExt& x) const {
  if (is_rational()) return QuadExt(rational()).compare(x);
  if (is_exact()) return surd().compare(x);
  const Interval& iv = interval();
  if (x.compare(QuadExt(iv.lo)) < 0) return 1;
  if (x.compare(QuadExt(iv.hi)) > 0) return -1;
  return 0;
}

double BoundedReal::to_double() const {
  if (is_rational()) return rational().get_d();
  if (is_exact()) return surd().to_double();
  return interval().mid().get_d();
}

std::string BoundedReal::decimal(int digits) const {
  if (is_rational()) return decimal_string(rational(), digits);
  if (is_exact()) return surd().decimal(digits);
  return decimal_string(interval().mid(), digits);
}

std::string BoundedReal::symbolic() const {
  if (is_rational()) return QuadExt(rational()).symbolic();
  if (is_exact()) return surd().symbolic();
  return "";
}

BoundedReal max_of(const BoundedReal& x, const BoundedReal& y, const Rational& eps) {
  if (x.is_exact() && y.is_exact()) {
    QuadExt xv = x.is_rational() ? QuadExt(x.rational()) : x.surd();
    QuadExt yv = y.is_rational() ? QuadExt(y.rational()) : y.surd();
    return xv.compare(yv) >= 0 ? x : y;
  }
  Interval a = x.enclosure(eps), b = y.enclosure(eps);
  if (a.hi < b.lo) return y;
  if (b.hi < a.lo) return x;
  return BoundedReal(Interval(std::max(a.lo, b.lo), std::max(a.hi, b.hi)));
}

BoundedReal bisect_sign(const std::function<int(const Rational&)>& f,
                        const Interval& bracket, const Rational& tol) {
  if (sgn(tol) <= 0) throw std::invalid_argument("bisect_sign: tol <= 0");
  Rational lo = bracket.lo, hi = bracket.hi;
  int slo = f(lo);
  if (slo == 0) return BoundedReal(lo);
  int shi = f(hi);
  if (shi == 0) return BoundedReal(hi);
  if (slo == shi) throw std::invalid_argument("bisect_sign: no sign change");
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    int sm = f(mid);
    if (sm == 0) return BoundedReal(mid);
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return BoundedReal(Interval(lo, hi));
}

}  // namespace ggr
