#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace ggr {

using Integer = mpz_class;
using Rational = mpq_class;

// q^e with integer exponent; e < 0 requires q != 0.
Rational pow_rational(const Rational& q, long e);

// Exact parse of an integer "12", a fraction "-7/3", or a decimal literal
// "2.186". Whitespace is not accepted. Returns nullopt on malformed input
// or zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

// Fixed-point rendering with exactly `digits` fractional digits,
// round half to even. digits == 0 drops the decimal point.
std::string decimal_string(const Rational& x, int digits);

inline int sign_of(const Rational& x) { return sgn(x); }

bool is_integer(const Rational& x);

// If x = r^2 for rational r >= 0, stores r and returns true.
bool rational_sqrt(const Rational& x, Rational* root);

// Largest k with 2^k <= n; requires n >= 1.
unsigned long floor_log2(const Integer& n);

}  // namespace ggr
