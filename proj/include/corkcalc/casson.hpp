#pragma once

#include "corkcalc/conway_family.hpp"
#include "corkcalc/laurent2.hpp"

namespace corkcalc {

// Framing data of the surgery description of Sigma_n. Both components of L_n
// carry framing 0 and link once, so the linking matrix is [[0, l], [l, 0]]
// with l = +-1 and det B = -1. Any other value is only used for fault injection.
struct FramingData {
  long det_b = -1;
};

// d^2 p / dx dy evaluated at (1, 1).
Rational mixed_partial_at_one(const LaurentPoly2& p);

// Same number computed from the u,v-form: at (1, 1) all first partials of u and
// v vanish, so the mixed partial acts as a derivation and
// u^a v^b contributes 2^(a+b) (a - b).
Rational mixed_partial_at_one(const UVPolynomial& p);

// lambda(Sigma_n) = -(1/det B) * (1/4) * d^2 nabla_{L_n} / dx dy (1, 1).
// Throws DomainError for n < 1 or |det B| != 1, ConsistencyError if the result
// is not an integer.
Rational casson_invariant(int n, const FramingData& framing = {},
                          const ConwayOptions& options = {});

// -n(n+1)(n+2)/3. Throws DomainError for n < 1.
Rational casson_closed_form(int n);

}  // namespace corkcalc
