#include "ggr/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ggr {

Rational pow_rational(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  bool inv = e < 0;
  unsigned long n = inv ? static_cast<unsigned long>(-(e + 1)) + 1ul
                        : static_cast<unsigned long>(e);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), n);
  r.canonicalize();
  if (inv) {
    if (r == 0) throw std::domain_error("pow_rational: 0 to negative power");
    r = 1 / r;
  }
  return r;
}

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::string* out) {
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out->push_back(text[i]);
      ++i;
    }
    return i > start;
  };
  std::string ipart;
  if (!digits(&ipart)) return std::nullopt;
  if (i == text.size()) {
    Rational r(ipart);
    return neg ? Rational(-r) : r;
  }
  if (text[i] == '/') {
    ++i;
    std::string den;
    if (!digits(&den) || i != text.size()) return std::nullopt;
    Integer d(den);
    if (d == 0) return std::nullopt;
    Rational r(Integer(ipart), d);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
  if (text[i] == '.') {
    ++i;
    std::string fpart;
    if (!digits(&fpart) || i != text.size()) return std::nullopt;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fpart.size());
    Rational r(Integer(ipart) * scale + Integer(fpart), scale);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
  return std::nullopt;
}

std::string decimal_string(const Rational& x, int digits) {
  if (digits < 0) throw std::invalid_argument("decimal_string: negative digits");
  if (sgn(x) < 0) return "-" + decimal_string(-x, digits);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = x * scale;
  Integer n = scaled.get_num() / scaled.get_den();  // floor (scaled >= 0)
  Rational frac = scaled - n;
  // Round half to even.
  int c = cmp(frac * 2, Rational(1));
  if (c > 0 || (c == 0 && mpz_odd_p(n.get_mpz_t()))) n += 1;
  std::string s = n.get_str();
  if (digits == 0) return s;
  if (s.size() <= static_cast<size_t>(digits))
    s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<size_t>(digits), ".");
  return s;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

bool rational_sqrt(const Rational& x, Rational* root) {
  if (sgn(x) < 0) return false;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  if (root) *root = Rational(rn, rd);
  return true;
}

unsigned long floor_log2(const Integer& n) {
  if (n < 1) throw std::domain_error("floor_log2: n < 1");
  return mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
}

}  // namespace ggr
