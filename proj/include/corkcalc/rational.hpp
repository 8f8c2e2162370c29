#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace corkcalc {

// Exact rational. gmpxx keeps arithmetic results canonical (reduced, den > 0);
// values built from a raw num/den pair must go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// "num/den", denominator always present ("-7/4", "2/1", "0/1").
std::string to_fraction_string(const Rational& q);

// Integer rendering; throws ConsistencyError if q is not an integer.
std::string to_integer_string(const Rational& q);

// Accepts "a" or "a/b" with optional sign; throws DomainError otherwise.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

// Requires is_integer(q) and that the value fits in a long.
long to_long(const Rational& q);

}  // namespace corkcalc
