#include "corkcalc/rational.hpp"

#include <limits>
#include <string>

#include "corkcalc/errors.hpp"

namespace corkcalc {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_integer_string(const Rational& q) {
  if (!is_integer(q)) {
    throw ConsistencyError("expected an integer, got " + to_fraction_string(q));
  }
  return q.get_num().get_str();
}

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw ConsistencyError("value does not fit in a machine integer: " + to_fraction_string(q));
  }
  return q.get_num().get_si();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_part = text.substr(0, slash);
  if (!is_integer_literal(num_part)) {
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num_part));

  const auto den_part = text.substr(slash + 1);
  if (!is_integer_literal(den_part)) {
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  }
  return make_rational(parse_integer(num_part), parse_integer(den_part));
}

}  // namespace corkcalc
