#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "corkcalc/rational.hpp"

namespace corkcalc {

// Exponent pair (a, b) of the monomial x^a y^b. Ordered lexicographically.
struct Exponent {
  int x = 0;
  int y = 0;
  auto operator<=>(const Exponent&) const = default;
};

enum class Variable { x, y };

struct Term {
  Exponent exponent;
  Rational coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

// Bivariate Laurent polynomial with rational coefficients.
//
// Always canonical: terms are sorted by exponent, no zero coefficients are
// stored and each exponent pair appears once, so operator== is structural
// equality of polynomials. The zero polynomial has no terms.
class LaurentPoly2 {
 public:
  using TermList = std::vector<Term>;

  LaurentPoly2() = default;

  static LaurentPoly2 constant(const Rational& c);
  static LaurentPoly2 monomial(int a, int b, const Rational& c = 1);
  // Duplicate exponents are summed; zero results are dropped.
  static LaurentPoly2 from_terms(std::span<const Term> terms);

  const TermList& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int a, int b) const;

  // Bounding box of the support; all zero for the zero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  LaurentPoly2& operator+=(const LaurentPoly2& rhs);
  LaurentPoly2& operator-=(const LaurentPoly2& rhs);
  LaurentPoly2& operator*=(const Rational& scalar);

  friend LaurentPoly2 operator+(LaurentPoly2 lhs, const LaurentPoly2& rhs) { return lhs += rhs; }
  friend LaurentPoly2 operator-(LaurentPoly2 lhs, const LaurentPoly2& rhs) { return lhs -= rhs; }
  friend LaurentPoly2 operator*(LaurentPoly2 lhs, const Rational& s) { return lhs *= s; }
  friend LaurentPoly2 operator*(const Rational& s, LaurentPoly2 rhs) { return rhs *= s; }
  friend LaurentPoly2 operator-(LaurentPoly2 p) { return p *= -1; }
  friend LaurentPoly2 operator*(const LaurentPoly2& lhs, const LaurentPoly2& rhs);
  friend bool operator==(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

 private:
  // Merges two canonical term lists, scaling the second by `sign`. Terms of
  // `lhs` are moved from.
  static TermList merge(TermList&& lhs, const TermList& rhs, int sign);

  TermList terms_;
};

LaurentPoly2 add(const LaurentPoly2& p, const LaurentPoly2& q);
LaurentPoly2 mul(const LaurentPoly2& p, const LaurentPoly2& q);

// Power rule applied termwise; negative exponents follow the same rule.
LaurentPoly2 partial_derivative(const LaurentPoly2& p, Variable variable);

// Exact value at (x0, y0). Throws DomainError if a coordinate is zero.
Rational eval(const LaurentPoly2& p, const Rational& x0, const Rational& y0);

// u = xy + x^-1 y^-1
LaurentPoly2 generator_u();
// v = x y^-1 + x^-1 y
LaurentPoly2 generator_v();

// x^a y^b -> x^b y^a
LaurentPoly2 swap_xy(const LaurentPoly2& p);
// x^a y^b -> x^-a y^-b
LaurentPoly2 invert_vars(const LaurentPoly2& p);

// base^exponent for any integer exponent; base must be nonzero when exponent < 0.
Rational int_power(const Rational& base, long exponent);

// Human-readable form, e.g. "x^2*y^-1 - 3/2*x + 1". Zero renders as "0".
std::string to_string(const LaurentPoly2& p);

}  // namespace corkcalc
