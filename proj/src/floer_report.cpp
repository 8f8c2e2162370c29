#include "corkcalc/floer_report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>

#include "corkcalc/errors.hpp"
#include "corkcalc/signature.hpp"

namespace corkcalc {

RankVector floer_ranks(int n) {
  if (n < 1) throw DomainError("floer_ranks: index must be >= 1");
  const long m = n;
  const long r = m * (m + 1) * (m + 2) / 6;
  return {{0, r, 0, r, 0, r, 0, r}};
}

long euler_characteristic(const RankVector& r) {
  long chi = 0;
  for (std::size_t j = 0; j < r.ranks.size(); ++j) chi += (j % 2 == 0 ? 1 : -1) * r.ranks[j];
  return chi;
}

Rational equivariant_casson_from_sigma(long sigma) { return make_rational(sigma, 8); }

VerdictReport nontriviality_verdict(int n, const VerdictOptions& options) {
  if (n < 1) throw DomainError("nontriviality_verdict: index must be >= 1");

  VerdictReport report;
  report.n = n;
  report.lambda = casson_invariant(n, options.framing, options.conway);
  const Rational closed = casson_closed_form(n);
  if (report.lambda != closed) {
    throw ConsistencyError("lambda(Sigma_" + std::to_string(n) + "): pipeline gives " +
                           to_fraction_string(report.lambda) + ", closed form gives " +
                           to_fraction_string(closed));
  }

  report.floer_ranks = floer_ranks(n);
  report.euler_char = euler_characteristic(report.floer_ranks);
  if (Rational(report.euler_char) != 2 * report.lambda) {
    throw ConsistencyError("Euler characteristic " + std::to_string(report.euler_char) +
                           " is not twice lambda(Sigma_" + std::to_string(n) + ")");
  }

  report.sigma_kn_lower_bound = kn_signature_lower_bound(n);
  report.lambda_tau_lower_bound = equivariant_casson_from_sigma(report.sigma_kn_lower_bound);
  if (n <= kKnownExactSignatureMax) {
    report.sigma_kn_exact = kn_signature_exact(n);
    report.lambda_tau_exact = equivariant_casson_from_sigma(*report.sigma_kn_exact);
  }
  report.lefschetz_identity = 2 * report.lambda;
  report.lefschetz_tau_lower_bound = 2 * report.lambda_tau_lower_bound;
  report.nontrivial = report.lambda < report.lambda_tau_lower_bound;
  return report;
}

std::vector<VerdictReport> sweep_verdicts(int max_n, unsigned workers, const VerdictOptions& options) {
  if (max_n < 1) throw DomainError("sweep_verdicts: max_n must be >= 1");
  std::vector<VerdictReport> reports(static_cast<std::size_t>(max_n));
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(max_n));

  // Largest n first: the cost grows with n, so this balances the tail.
  std::atomic<int> next{max_n};
  std::vector<std::exception_ptr> failures(reports.size());
  auto work = [&] {
    for (int n = next--; n >= 1; n = next--) {
      const auto slot = static_cast<std::size_t>(n - 1);
      try {
        reports[slot] = nontriviality_verdict(n, options);
      } catch (...) {
        failures[slot] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  // Smallest failing n, independent of scheduling.
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return reports;
}

}  // namespace corkcalc
