#pragma once

#include <array>
#include <optional>
#include <vector>

#include "corkcalc/casson.hpp"
#include "corkcalc/rational.hpp"

namespace corkcalc {

// Ranks of the instanton Floer groups I_0 .. I_7.
struct RankVector {
  std::array<long, 8> ranks{};
  friend bool operator==(const RankVector&, const RankVector&) = default;
};

// (0, r, 0, r, 0, r, 0, r) with r = n(n+1)(n+2)/6. Throws DomainError for n < 1.
RankVector floer_ranks(int n);

// Alternating sum over the eight gradings.
long euler_characteristic(const RankVector& r);

// lambda^tau = sigma(k) / 8 for the branch knot k of the involution.
Rational equivariant_casson_from_sigma(long sigma);

struct VerdictReport {
  int n = 0;
  Rational lambda;
  RankVector floer_ranks;
  long euler_char = 0;
  int sigma_kn_lower_bound = 0;
  std::optional<int> sigma_kn_exact;
  Rational lambda_tau_lower_bound;
  std::optional<Rational> lambda_tau_exact;
  Rational lefschetz_identity;      // Lefschetz number of the identity, 2 lambda
  Rational lefschetz_tau_lower_bound;  // lower bound on the Lefschetz number of tau_*, 2 lambda^tau
  bool nontrivial = false;
};

struct VerdictOptions {
  FramingData framing;
  ConwayOptions conway;
};

// Assembles the report for Sigma_n. tau_* is certified nontrivial when
// lambda < lambda_tau_lower_bound, which forces the two Lefschetz numbers apart.
// Throws ConsistencyError if the pipeline lambda disagrees with the closed form
// or with half the Euler characteristic.
VerdictReport nontriviality_verdict(int n, const VerdictOptions& options = {});

// Reports for n = 1 .. max_n in ascending order. Work is spread over
// `workers` threads (0 = hardware concurrency); the result does not depend on it.
std::vector<VerdictReport> sweep_verdicts(int max_n, unsigned workers = 0,
                                          const VerdictOptions& options = {});

}  // namespace corkcalc
