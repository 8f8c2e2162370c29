#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "corkcalc/floer_report.hpp"
#include "corkcalc/laurent2.hpp"

namespace corkcalc {

using Json = nlohmann::ordered_json;

// [[a, b, "num/den"], ...] sorted lexicographically by (a, b).
Json laurent_to_json(const LaurentPoly2& p);
// Inverse of laurent_to_json. Throws DomainError on malformed input,
// unsorted or duplicate exponents, or zero coefficients.
LaurentPoly2 laurent_from_json(const Json& j);

// Report object with keys in the published order:
// n, lambda, floer_ranks, euler_char, sigma_kn_lower_bound, sigma_kn_exact,
// lambda_tau_lower_bound, lambda_tau_exact, lefschetz_identity, nontrivial.
Json report_to_json(const VerdictReport& r);

// Describes the first schema violation, or nullopt if `j` is a valid report.
std::optional<std::string> report_schema_violation(const Json& j);

std::string csv_header();
std::string report_to_csv_row(const VerdictReport& r);
std::string report_to_text(const VerdictReport& r);

}  // namespace corkcalc
