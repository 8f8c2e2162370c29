#include <doctest.h>

#include "corkcalc/errors.hpp"
#include "corkcalc/floer_report.hpp"
#include "corkcalc/signature.hpp"

using namespace corkcalc;

TEST_CASE("floer_ranks") {
  CHECK(floer_ranks(1) == RankVector{{0, 1, 0, 1, 0, 1, 0, 1}});
  CHECK(floer_ranks(2) == RankVector{{0, 4, 0, 4, 0, 4, 0, 4}});
  CHECK(floer_ranks(3) == RankVector{{0, 10, 0, 10, 0, 10, 0, 10}});
  for (int n = 1; n <= 100; ++n) {
    const auto r = floer_ranks(n);
    for (std::size_t j = 0; j < 8; j += 2) CHECK(r.ranks[j] == 0);
  }
  CHECK_THROWS_AS(floer_ranks(0), DomainError);
}

TEST_CASE("euler_characteristic") {
  CHECK(euler_characteristic(floer_ranks(1)) == -4);
  CHECK(euler_characteristic(RankVector{}) == 0);
  CHECK(euler_characteristic(floer_ranks(2)) == -16);
  CHECK(euler_characteristic(RankVector{{3, 0, 0, 0, 0, 0, 0, 1}}) == 2);
}

TEST_CASE("Euler characteristic is twice the Casson invariant") {
  for (int n = 1; n <= 100; ++n) {
    CAPTURE(n);
    CHECK(Rational(euler_characteristic(floer_ranks(n))) == 2 * casson_closed_form(n));
  }
}

TEST_CASE("equivariant_casson_from_sigma") {
  CHECK(equivariant_casson_from_sigma(16) == 2);
  CHECK(equivariant_casson_from_sigma(0) == 0);
  CHECK(equivariant_casson_from_sigma(48) == 6);
  CHECK(equivariant_casson_from_sigma(-14) == make_rational(-7, 4));
}

TEST_CASE("nontriviality_verdict at n = 1 and 2") {
  const VerdictReport one = nontriviality_verdict(1);
  CHECK(one.lambda == -2);
  CHECK(one.lambda_tau_lower_bound == 0);
  REQUIRE(one.lambda_tau_exact.has_value());
  CHECK(*one.lambda_tau_exact == 2);
  CHECK(one.sigma_kn_exact == 16);
  CHECK(one.euler_char == -4);
  CHECK(one.lefschetz_identity == -4);
  CHECK(one.lefschetz_tau_lower_bound == 0);
  CHECK(one.nontrivial);

  const VerdictReport two = nontriviality_verdict(2);
  CHECK(two.lambda == -8);
  CHECK(two.sigma_kn_lower_bound == -14);
  CHECK(two.lambda_tau_lower_bound == make_rational(-14, 8));
  CHECK(two.nontrivial);

  const VerdictReport five = nontriviality_verdict(5);
  CHECK_FALSE(five.sigma_kn_exact.has_value());
  CHECK_FALSE(five.lambda_tau_exact.has_value());
  CHECK_THROWS_AS(nontriviality_verdict(0), DomainError);
}

TEST_CASE("verdict invariants over a sweep") {
  const auto reports = sweep_verdicts(40);
  REQUIRE(reports.size() == 40);
  bool seen_true = false;
  for (const auto& r : reports) {
    CAPTURE(r.n);
    CHECK(r.n == (&r - reports.data()) + 1);
    CHECK(r.lefschetz_identity == 2 * r.lambda);
    CHECK(r.lefschetz_tau_lower_bound == 2 * r.lambda_tau_lower_bound);
    CHECK(r.nontrivial == (r.lambda < r.lambda_tau_lower_bound));
    if (r.lambda_tau_exact) CHECK(*r.lambda_tau_exact >= r.lambda_tau_lower_bound);
    if (seen_true) CHECK(r.nontrivial);
    seen_true = seen_true || r.nontrivial;
  }
}

TEST_CASE("the verdict holds far beyond the swept range") {
  // Cubic lambda against a linear bound, from the two closed forms alone.
  for (int n = 1; n <= 100; ++n) {
    CHECK(casson_closed_form(n) < equivariant_casson_from_sigma(kn_signature_lower_bound(n)));
  }
}

TEST_CASE("sweeps do not depend on the worker count") {
  const auto serial = sweep_verdicts(12, 1);
  const auto parallel = sweep_verdicts(12, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].n == parallel[i].n);
    CHECK(serial[i].lambda == parallel[i].lambda);
    CHECK(serial[i].nontrivial == parallel[i].nontrivial);
  }
  CHECK_THROWS_AS(sweep_verdicts(0), DomainError);
}

TEST_CASE("pipeline faults surface as consistency errors") {
  const VerdictOptions bad_framing{.framing = {.det_b = 1}};
  CHECK_THROWS_AS(nontriviality_verdict(1, bad_framing), ConsistencyError);
  CHECK_THROWS_AS(sweep_verdicts(3, 2, bad_framing), ConsistencyError);
}
