#pragma once

#include <vector>

#include "corkcalc/laurent2.hpp"

namespace corkcalc {

// Knobs for the potential-function pipeline. The default is the only
// mathematically meaningful setting; the self-check flips it to verify that
// the Casson anchors catch a wrong Hopf-link sign.
struct ConwayOptions {
  Rational g1 = -1;  // value of g_1, the potential of the Hopf link H_1
};

// Polynomial in the abstract generators u and v: the exponent pair (a, b)
// stores the coefficient of u^a v^b. Only nonnegative exponents occur.
struct UVPolynomial {
  LaurentPoly2 coefficients;
  friend bool operator==(const UVPolynomial&, const UVPolynomial&) = default;
};

struct PotentialPair {
  LaurentPoly2 f0;
  LaurentPoly2 f1;
};

// g_n = potential of H_n: g_0 = 0, g_1 = -1, g_{k+1} = v g_k - g_{k-1}.
// Throws DomainError for n < 0.
LaurentPoly2 chebyshev_g(int n, const ConwayOptions& options = {});

// f0 = -g_{n+1} + u g_n, f1 = -u g_{n+1} + (u^2 - 1) g_n, expanded in x, y.
// Throws DomainError for n < 1.
PotentialPair initial_conditions(int n, const ConwayOptions& options = {});

// f_0 .. f_last of the recurrence f_{k+2} = u f_{k+1} - f_k started at `start`.
std::vector<LaurentPoly2> potential_recurrence(const PotentialPair& start, int last);

// Potential function of L_n: the recurrence seeded with initial_conditions(n)
// and read off at index n. Throws DomainError for n < 1.
LaurentPoly2 conway_potential_L(int n, const ConwayOptions& options = {});

// The same computation carried out over the free generators u, v.
UVPolynomial chebyshev_g_uv(int n, const ConwayOptions& options = {});
UVPolynomial conway_potential_L_uv(int n, const ConwayOptions& options = {});

// Substitutes u = xy + x^-1 y^-1 and v = x y^-1 + x^-1 y.
LaurentPoly2 expand(const UVPolynomial& p);

}  // namespace corkcalc
