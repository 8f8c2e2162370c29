#include "corkcalc/laurent2.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "corkcalc/errors.hpp"

namespace corkcalc {

LaurentPoly2 LaurentPoly2::constant(const Rational& c) { return monomial(0, 0, c); }

LaurentPoly2 LaurentPoly2::monomial(int a, int b, const Rational& c) {
  LaurentPoly2 p;
  if (c != 0) p.terms_.push_back({{a, b}, c});
  return p;
}

LaurentPoly2 LaurentPoly2::from_terms(std::span<const Term> terms) {
  TermList sorted(terms.begin(), terms.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Term& l, const Term& r) { return l.exponent < r.exponent; });
  LaurentPoly2 p;
  for (auto& t : sorted) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

Rational LaurentPoly2::coefficient(int a, int b) const {
  const Exponent e{a, b};
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const Exponent& key) { return t.exponent < key; });
  return (it != terms_.end() && it->exponent == e) ? it->coefficient : Rational(0);
}

Exponent LaurentPoly2::min_exponent() const {
  if (terms_.empty()) return {};
  Exponent lo = terms_.front().exponent;
  for (const auto& [e, c] : terms_) lo.y = std::min(lo.y, e.y);
  return lo;
}

Exponent LaurentPoly2::max_exponent() const {
  if (terms_.empty()) return {};
  Exponent hi = terms_.back().exponent;
  for (const auto& [e, c] : terms_) hi.y = std::max(hi.y, e.y);
  return hi;
}

LaurentPoly2::TermList LaurentPoly2::merge(TermList&& lhs, const TermList& rhs, int sign) {
  TermList out;
  out.reserve(lhs.size() + rhs.size());
  auto l = lhs.begin();
  auto r = rhs.begin();
  while (l != lhs.end() || r != rhs.end()) {
    if (r == rhs.end() || (l != lhs.end() && l->exponent < r->exponent)) {
      out.push_back(std::move(*l++));
    } else if (l == lhs.end() || r->exponent < l->exponent) {
      out.push_back({r->exponent, sign * r->coefficient});
      ++r;
    } else {
      if (sign > 0) {
        l->coefficient += r->coefficient;
      } else {
        l->coefficient -= r->coefficient;
      }
      if (l->coefficient != 0) out.push_back(std::move(*l));
      ++l;
      ++r;
    }
  }
  return out;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& rhs) {
  terms_ = merge(std::move(terms_), rhs.terms_, 1);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& rhs) {
  terms_ = merge(std::move(terms_), rhs.terms_, -1);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= scalar;
  return *this;
}

namespace {

// `large` shifted by `shift` with coefficients scaled by `scale`; still sorted.
LaurentPoly2::TermList shifted_copy(const LaurentPoly2::TermList& large, const Exponent& shift,
                                    const Rational& scale) {
  LaurentPoly2::TermList out;
  out.reserve(large.size());
  const bool unit = scale == 1;
  for (const auto& [e, c] : large) {
    out.push_back({{shift.x + e.x, shift.y + e.y}, unit ? c : Rational(scale * c)});
  }
  return out;
}

}  // namespace

LaurentPoly2 operator*(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
  // Shifting a sorted term list by a fixed exponent keeps it sorted, so the
  // product is a sum of |small| shifted, scaled copies of the larger factor.
  const auto& small = lhs.size() <= rhs.size() ? lhs : rhs;
  const auto& large = lhs.size() <= rhs.size() ? rhs : lhs;
  LaurentPoly2 out;
  for (const auto& [es, cs] : small.terms_) {
    auto shifted = shifted_copy(large.terms_, es, cs);
    if (out.terms_.empty()) {
      out.terms_ = std::move(shifted);
    } else {
      out.terms_ = LaurentPoly2::merge(std::move(out.terms_), shifted, 1);
    }
  }
  return out;
}

LaurentPoly2 add(const LaurentPoly2& p, const LaurentPoly2& q) { return p + q; }
LaurentPoly2 mul(const LaurentPoly2& p, const LaurentPoly2& q) { return p * q; }

LaurentPoly2 partial_derivative(const LaurentPoly2& p, Variable variable) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    const int power = variable == Variable::x ? e.x : e.y;
    if (power == 0) continue;
    Exponent lowered = e;
    (variable == Variable::x ? lowered.x : lowered.y) -= 1;
    out.push_back({lowered, c * power});
  }
  return LaurentPoly2::from_terms(out);
}

Rational int_power(const Rational& base, long exponent) {
  if (exponent < 0 && base == 0) throw DomainError("zero raised to a negative power");
  const unsigned long k = static_cast<unsigned long>(std::labs(exponent));
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  return exponent >= 0 ? make_rational(num, den) : make_rational(den, num);
}

namespace {

// Powers base^lo .. base^hi, indexed by (k - lo).
std::vector<Rational> power_table(const Rational& base, int lo, int hi) {
  std::vector<Rational> table;
  table.reserve(static_cast<std::size_t>(hi - lo + 1));
  table.push_back(int_power(base, lo));
  for (int k = lo + 1; k <= hi; ++k) table.push_back(table.back() * base);
  return table;
}

}  // namespace

Rational eval(const LaurentPoly2& p, const Rational& x0, const Rational& y0) {
  if (x0 == 0 || y0 == 0) {
    throw DomainError("Laurent polynomial evaluated at a zero coordinate");
  }
  if (p.is_zero()) return 0;
  const Exponent lo = p.min_exponent();
  const Exponent hi = p.max_exponent();
  const auto xs = power_table(x0, lo.x, hi.x);
  const auto ys = power_table(y0, lo.y, hi.y);
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    sum += c * xs[static_cast<std::size_t>(e.x - lo.x)] * ys[static_cast<std::size_t>(e.y - lo.y)];
  }
  return sum;
}

LaurentPoly2 generator_u() {
  const Term terms[] = {{{1, 1}, 1}, {{-1, -1}, 1}};
  return LaurentPoly2::from_terms(terms);
}

LaurentPoly2 generator_v() {
  const Term terms[] = {{{1, -1}, 1}, {{-1, 1}, 1}};
  return LaurentPoly2::from_terms(terms);
}

namespace {

template <typename Map>
LaurentPoly2 map_exponents(const LaurentPoly2& p, Map f) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) out.push_back({f(e), c});
  return LaurentPoly2::from_terms(out);
}

}  // namespace

LaurentPoly2 swap_xy(const LaurentPoly2& p) {
  return map_exponents(p, [](Exponent e) { return Exponent{e.y, e.x}; });
}

LaurentPoly2 invert_vars(const LaurentPoly2& p) {
  return map_exponents(p, [](Exponent e) { return Exponent{-e.x, -e.y}; });
}

namespace {

std::string monomial_string(const Exponent& e) {
  std::string out;
  auto factor = [&out](const char* name, int power) {
    if (power == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (power != 1) out += "^" + std::to_string(power);
  };
  factor("x", e.x);
  factor("y", e.y);
  return out;
}

}  // namespace

std::string to_string(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest exponents first, the usual reading order.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomial_string(e);
    if (mono.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace corkcalc
