#include "corkcalc/conway_family.hpp"

#include <string>
#include <utility>

#include "corkcalc/errors.hpp"

namespace corkcalc {
namespace {

// The recurrences only ever multiply by u and v, so they are written once
// against an arbitrary choice of the two generators.
struct Generators {
  LaurentPoly2 u;
  LaurentPoly2 v;
};

Generators xy_generators() { return {generator_u(), generator_v()}; }

Generators uv_generators() { return {LaurentPoly2::monomial(1, 0), LaurentPoly2::monomial(0, 1)}; }

// (g_n, g_{n+1})
std::pair<LaurentPoly2, LaurentPoly2> chebyshev_pair(int n, const Generators& gen,
                                                     const ConwayOptions& options) {
  LaurentPoly2 current;  // g_0
  LaurentPoly2 next = LaurentPoly2::constant(options.g1);
  for (int k = 0; k < n; ++k) {
    LaurentPoly2 after = gen.v * next - current;
    current = std::move(next);
    next = std::move(after);
  }
  return {std::move(current), std::move(next)};
}

PotentialPair seed(int n, const Generators& gen, const ConwayOptions& options) {
  const auto [g_n, g_next] = chebyshev_pair(n, gen, options);
  const LaurentPoly2 u_squared_minus_one = gen.u * gen.u - LaurentPoly2::constant(1);
  return {gen.u * g_n - g_next, u_squared_minus_one * g_n - gen.u * g_next};
}

LaurentPoly2 iterate_to(const PotentialPair& start, int index, const LaurentPoly2& u) {
  if (index == 0) return start.f0;
  LaurentPoly2 previous = start.f0;
  LaurentPoly2 current = start.f1;
  for (int k = 1; k < index; ++k) {
    LaurentPoly2 after = u * current - previous;
    previous = std::move(current);
    current = std::move(after);
  }
  return current;
}

void require_index(int n, int minimum, const char* what) {
  if (n < minimum) {
    throw DomainError(std::string(what) + ": index must be >= " + std::to_string(minimum) +
                      ", got " + std::to_string(n));
  }
}

}  // namespace

LaurentPoly2 chebyshev_g(int n, const ConwayOptions& options) {
  require_index(n, 0, "chebyshev_g");
  return chebyshev_pair(n, xy_generators(), options).first;
}

PotentialPair initial_conditions(int n, const ConwayOptions& options) {
  require_index(n, 1, "initial_conditions");
  return seed(n, xy_generators(), options);
}

std::vector<LaurentPoly2> potential_recurrence(const PotentialPair& start, int last) {
  require_index(last, 0, "potential_recurrence");
  const LaurentPoly2 u = generator_u();
  std::vector<LaurentPoly2> out{start.f0};
  if (last >= 1) out.push_back(start.f1);
  for (int k = 2; k <= last; ++k) out.push_back(u * out[k - 1] - out[k - 2]);
  return out;
}

LaurentPoly2 conway_potential_L(int n, const ConwayOptions& options) {
  require_index(n, 1, "conway_potential_L");
  const Generators gen = xy_generators();
  return iterate_to(seed(n, gen, options), n, gen.u);
}

UVPolynomial chebyshev_g_uv(int n, const ConwayOptions& options) {
  require_index(n, 0, "chebyshev_g_uv");
  return {chebyshev_pair(n, uv_generators(), options).first};
}

UVPolynomial conway_potential_L_uv(int n, const ConwayOptions& options) {
  require_index(n, 1, "conway_potential_L_uv");
  const Generators gen = uv_generators();
  return {iterate_to(seed(n, gen, options), n, gen.u)};
}

LaurentPoly2 expand(const UVPolynomial& p) {
  const Generators gen = xy_generators();
  const Exponent hi = p.coefficients.max_exponent();
  std::vector<LaurentPoly2> u_powers{LaurentPoly2::constant(1)};
  std::vector<LaurentPoly2> v_powers{LaurentPoly2::constant(1)};
  for (int k = 1; k <= hi.x; ++k) u_powers.push_back(u_powers.back() * gen.u);
  for (int k = 1; k <= hi.y; ++k) v_powers.push_back(v_powers.back() * gen.v);

  LaurentPoly2 out;
  for (const auto& [e, c] : p.coefficients.terms()) {
    if (e.x < 0 || e.y < 0) throw DomainError("expand: negative power of u or v");
    out += c * (u_powers[static_cast<std::size_t>(e.x)] * v_powers[static_cast<std::size_t>(e.y)]);
  }
  return out;
}

}  // namespace corkcalc
