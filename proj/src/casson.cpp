#include "corkcalc/casson.hpp"

#include <string>

#include "corkcalc/errors.hpp"

namespace corkcalc {

Rational mixed_partial_at_one(const LaurentPoly2& p) {
  const LaurentPoly2 dxy = partial_derivative(partial_derivative(p, Variable::x), Variable::y);
  return eval(dxy, 1, 1);
}

Rational mixed_partial_at_one(const UVPolynomial& p) {
  Rational sum = 0;
  Integer weight;
  for (const auto& [e, c] : p.coefficients.terms()) {
    mpz_ui_pow_ui(weight.get_mpz_t(), 2, static_cast<unsigned long>(e.x + e.y));
    sum += c * Rational(weight * (e.x - e.y));
  }
  return sum;
}

Rational casson_invariant(int n, const FramingData& framing, const ConwayOptions& options) {
  if (n < 1) throw DomainError("casson_invariant: index must be >= 1, got " + std::to_string(n));
  if (framing.det_b != 1 && framing.det_b != -1) {
    throw DomainError("casson_invariant: framing matrix must be unimodular");
  }
  const Rational second = mixed_partial_at_one(conway_potential_L(n, options));
  const Rational lambda = -second / (4 * framing.det_b);
  if (!is_integer(lambda)) {
    throw ConsistencyError("casson_invariant(" + std::to_string(n) +
                           ") is not an integer: " + to_fraction_string(lambda));
  }
  return lambda;
}

Rational casson_closed_form(int n) {
  if (n < 1) throw DomainError("casson_closed_form: index must be >= 1, got " + std::to_string(n));
  const Integer m = n;
  return make_rational(-m * (m + 1) * (m + 2), 3);
}

}  // namespace corkcalc
