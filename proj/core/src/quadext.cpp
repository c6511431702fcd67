#include "ggr/quadext.hpp"

#include <stdexcept>

namespace ggr {

namespace {

// s/2^k <= sqrt(d) < (s+1)/2^k for nonnegative integer d.
void sqrt_bounds(const Integer& d, unsigned long k, Rational* lo, Rational* hi) {
  Integer scaled = d;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * k);
  Integer s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  Integer pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, k);
  *lo = Rational(s, pow2);
  *hi = Rational(s + 1, pow2);
  lo->canonicalize();
  hi->canonicalize();
}

}  // namespace

QuadExt::QuadExt(const Rational& a, const Rational& b, const Rational& r)
    : a_(a), b_(b), d_(0) {
  if (sgn(r) < 0) throw std::domain_error("QuadExt: negative radicand");
  if (b_ == 0 || r == 0) {
    b_ = 0;
    return;
  }
  // a + b*sqrt(u/v) = a + (b/v)*sqrt(u*v)
  d_ = r.get_num() * r.get_den();
  b_ /= r.get_den();
  strip_square_factors();
  collapse();
}

// Pull small square divisors out of the radicand so equal values get equal
// representations: sqrt(20) becomes 2*sqrt(5). Arithmetic never changes the
// radicand, so doing this at construction keeps it reduced for good.
void QuadExt::strip_square_factors() {
  for (unsigned long f = 2; f <= 65536; ++f) {
    Integer f2;
    mpz_ui_pow_ui(f2.get_mpz_t(), f, 2);
    if (f2 > d_) break;
    while (mpz_divisible_p(d_.get_mpz_t(), f2.get_mpz_t())) {
      mpz_divexact(d_.get_mpz_t(), d_.get_mpz_t(), f2.get_mpz_t());
      b_ *= f;
    }
  }
}

void QuadExt::collapse() {
  if (b_ == 0) {
    d_ = 0;
    return;
  }
  if (mpz_perfect_square_p(d_.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), d_.get_mpz_t());
    a_ += b_ * s;
    b_ = 0;
    d_ = 0;
  }
}

const Rational& QuadExt::as_rational() const {
  if (!is_rational()) throw std::logic_error("QuadExt: irrational value");
  return a_;
}

QuadExt QuadExt::operator-() const { return QuadExt(-a_, -b_, d_); }

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  if (b_ == 0) {
    a_ += o.a_;
    b_ = o.b_;
    d_ = o.d_;
    return *this;
  }
  if (o.b_ != 0 && d_ != o.d_)
    throw std::domain_error("QuadExt: mixed radicands in +");
  a_ += o.a_;
  b_ += o.b_;
  collapse();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) { return *this += -o; }

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  if (b_ == 0 || o.b_ == 0) {
    Integer d = b_ == 0 ? o.d_ : d_;
    Rational na = a_ * o.a_ + b_ * o.b_ * d;  // one of the products is 0
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    d_ = nb == 0 ? Integer(0) : d;
    return *this;
  }
  if (d_ != o.d_) throw std::domain_error("QuadExt: mixed radicands in *");
  Rational na = a_ * o.a_ + b_ * o.b_ * d_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  if (b_ == 0) d_ = 0;
  return *this;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("QuadExt: inverse of zero");
  if (b_ == 0) return QuadExt(1 / a_);
  Rational n = norm();  // nonzero: D is not a perfect square
  return QuadExt(a_ / n, -b_ / n, d_);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

QuadExt QuadExt::pow(unsigned long e) const {
  QuadExt acc(1);
  QuadExt base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

int QuadExt::sign() const {
  if (b_ == 0) return sgn(a_);
  int sa = sgn(a_), sb = sgn(b_);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(D) have opposite signs: compare a^2 with b^2*D.
  int c = cmp(a_ * a_, b_ * b_ * d_);
  if (c == 0) return 0;  // cannot happen in normal form, kept for safety
  return c > 0 ? sa : sb;
}

bool QuadExt::operator==(const QuadExt& o) const {
  if (d_ == o.d_) return a_ == o.a_ && b_ == o.b_;
  // Same value in differently written extensions: match trace, norm and
  // the sign of the irrational part.
  return a_ == o.a_ && sgn(b_) == sgn(o.b_) && b_ * b_ * d_ == o.b_ * o.b_ * o.d_;
}

int QuadExt::compare(const QuadExt& o) const {
  if (b_ == 0 || o.b_ == 0 || d_ == o.d_) {
    QuadExt diff = *this;
    diff -= o;
    return diff.sign();
  }
  if (*this == o) return 0;
  Rational lo1, hi1, lo2, hi2;
  for (unsigned long k = 8;; k *= 2) {
    Rational eps = pow_rational(Rational(1, 2), static_cast<long>(k));
    enclose(eps, &lo1, &hi1);
    o.enclose(eps, &lo2, &hi2);
    if (hi1 < lo2) return -1;
    if (hi2 < lo1) return 1;
    if (k > 1u << 20) throw std::runtime_error("QuadExt::compare: no separation");
  }
}

void QuadExt::enclose(const Rational& eps, Rational* lo, Rational* hi) const {
  if (sgn(eps) <= 0) throw std::invalid_argument("QuadExt::enclose: eps <= 0");
  if (b_ == 0) {
    *lo = a_;
    *hi = a_;
    return;
  }
  // Want |b| * (sqrt bracket width) <= eps; width at scale k is 1/2^k.
  Rational need = abs(b_) / eps;  // require 2^k >= need
  unsigned long k = 1;
  if (need > 1) k = floor_log2(need.get_num() / need.get_den() + 1) + 2;
  Rational slo, shi;
  sqrt_bounds(d_, k, &slo, &shi);
  if (sgn(b_) > 0) {
    *lo = a_ + b_ * slo;
    *hi = a_ + b_ * shi;
  } else {
    *lo = a_ + b_ * shi;
    *hi = a_ + b_ * slo;
  }
}

double QuadExt::to_double() const {
  Rational lo, hi;
  enclose(Rational(1, Integer("18446744073709551616")), &lo, &hi);  // 2^-64
  return lo.get_d() / 2 + hi.get_d() / 2;
}

std::string QuadExt::decimal(int digits) const {
  if (b_ == 0) return decimal_string(a_, digits);
  Rational eps = pow_rational(Rational(1, 10), digits + 4);
  for (;;) {
    Rational lo, hi;
    enclose(eps, &lo, &hi);
    std::string slo = decimal_string(lo, digits);
    std::string shi = decimal_string(hi, digits);
    if (slo == shi) return slo;
    eps /= 1024;  // irrational: enclosures eventually avoid the boundary
  }
}

std::string QuadExt::symbolic() const {
  auto rat = [](const Rational& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
  };
  if (b_ == 0) return rat(a_);
  // Write as (p + q*sqrt(D))/s with integers p, q, s > 0, gcd(p, q, s) = 1.
  Integer s;
  mpz_lcm(s.get_mpz_t(), a_.get_den().get_mpz_t(), b_.get_den().get_mpz_t());
  Integer p = a_.get_num() * (s / a_.get_den());
  Integer q = b_.get_num() * (s / b_.get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
  if (g > 1) {
    p /= g;
    q /= g;
    s /= g;
  }
  Integer qa = abs(q);
  std::string surd = "sqrt(" + d_.get_str() + ")";
  if (qa != 1) surd = qa.get_str() + "*" + surd;
  std::string core;
  if (p == 0)
    core = (sgn(q) < 0 ? "-" : "") + surd;
  else
    core = p.get_str() + (sgn(q) < 0 ? "-" : "+") + surd;
  if (s == 1) return core;
  if (p == 0) return core + "/" + s.get_str();
  return "(" + core + ")/" + s.get_str();
}

}  // namespace ggr
