#include "corkcalc/report_io.hpp"

#include <regex>
#include <sstream>
#include <vector>

#include "corkcalc/errors.hpp"

namespace corkcalc {

Json laurent_to_json(const LaurentPoly2& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e.x, e.y, to_fraction_string(c)}));
  return out;
}

LaurentPoly2 laurent_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
  std::vector<Term> terms;
  std::optional<Exponent> previous;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
        !item[1].is_number_integer() || !item[2].is_string()) {
      throw DomainError("polynomial term must be [int, int, \"num/den\"]: " + item.dump());
    }
    const Exponent e{item[0].get<int>(), item[1].get<int>()};
    if (previous && !(*previous < e)) {
      throw DomainError("polynomial terms must be strictly increasing in (a, b)");
    }
    const Rational c = parse_rational(item[2].get<std::string>());
    if (c == 0) throw DomainError("polynomial JSON must not store zero coefficients");
    terms.push_back({e, c});
    previous = e;
  }
  return LaurentPoly2::from_terms(terms);
}

Json report_to_json(const VerdictReport& r) {
  Json ranks = Json::array();
  for (long rank : r.floer_ranks.ranks) ranks.push_back(rank);
  Json out;
  out["n"] = r.n;
  out["lambda"] = to_integer_string(r.lambda);
  out["floer_ranks"] = std::move(ranks);
  out["euler_char"] = r.euler_char;
  out["sigma_kn_lower_bound"] = r.sigma_kn_lower_bound;
  out["sigma_kn_exact"] = r.sigma_kn_exact ? Json(*r.sigma_kn_exact) : Json(nullptr);
  out["lambda_tau_lower_bound"] = to_fraction_string(r.lambda_tau_lower_bound);
  out["lambda_tau_exact"] =
      r.lambda_tau_exact ? Json(to_fraction_string(*r.lambda_tau_exact)) : Json(nullptr);
  out["lefschetz_identity"] = to_integer_string(r.lefschetz_identity);
  out["nontrivial"] = r.nontrivial;
  return out;
}

namespace {

bool is_fraction_string(const Json& j) {
  static const std::regex pattern(R"(-?(0|[1-9][0-9]*)/[1-9][0-9]*)");
  return j.is_string() && std::regex_match(j.get<std::string>(), pattern);
}

bool is_integer_string(const Json& j) {
  static const std::regex pattern(R"(0|-?[1-9][0-9]*)");
  return j.is_string() && std::regex_match(j.get<std::string>(), pattern);
}

}  // namespace

std::optional<std::string> report_schema_violation(const Json& j) {
  static const std::vector<std::string> keys = {
      "n",          "lambda",           "floer_ranks",        "euler_char",
      "sigma_kn_lower_bound", "sigma_kn_exact", "lambda_tau_lower_bound", "lambda_tau_exact",
      "lefschetz_identity",   "nontrivial"};
  if (!j.is_object()) return "report is not an object";
  if (j.size() != keys.size()) return "report has " + std::to_string(j.size()) + " keys";
  for (const auto& key : keys) {
    if (!j.contains(key)) return "missing key " + key;
  }
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 1) return "n must be a positive int";
  if (!is_integer_string(j["lambda"])) return "lambda must be an integer string";
  const auto& ranks = j["floer_ranks"];
  if (!ranks.is_array() || ranks.size() != 8) return "floer_ranks must have 8 entries";
  for (const auto& rank : ranks) {
    if (!rank.is_number_integer() || rank.get<long>() < 0) return "floer_ranks must be non-negative ints";
  }
  if (!j["euler_char"].is_number_integer()) return "euler_char must be an int";
  if (!j["sigma_kn_lower_bound"].is_number_integer()) return "sigma_kn_lower_bound must be an int";
  if (!j["sigma_kn_exact"].is_null() && !j["sigma_kn_exact"].is_number_integer()) {
    return "sigma_kn_exact must be an int or null";
  }
  if (!is_fraction_string(j["lambda_tau_lower_bound"])) return "lambda_tau_lower_bound must be num/den";
  if (!j["lambda_tau_exact"].is_null() && !is_fraction_string(j["lambda_tau_exact"])) {
    return "lambda_tau_exact must be num/den or null";
  }
  if (!is_integer_string(j["lefschetz_identity"])) return "lefschetz_identity must be an integer string";
  if (!j["nontrivial"].is_boolean()) return "nontrivial must be a bool";
  return std::nullopt;
}

std::string csv_header() {
  return "n,lambda,euler_char,sigma_lower_bound,sigma_exact,lambda_tau_lower_bound,"
         "lambda_tau_exact,nontrivial";
}

std::string report_to_csv_row(const VerdictReport& r) {
  std::ostringstream row;
  row << r.n << ',' << to_integer_string(r.lambda) << ',' << r.euler_char << ','
      << r.sigma_kn_lower_bound << ',' << (r.sigma_kn_exact ? std::to_string(*r.sigma_kn_exact) : "")
      << ',' << to_fraction_string(r.lambda_tau_lower_bound) << ','
      << (r.lambda_tau_exact ? to_fraction_string(*r.lambda_tau_exact) : "") << ','
      << (r.nontrivial ? "true" : "false");
  return row.str();
}

std::string report_to_text(const VerdictReport& r) {
  std::ostringstream out;
  out << "Sigma_" << r.n << '\n';
  out << "  lambda                  = " << r.lambda << '\n';
  out << "  Floer ranks I_0..I_7    =";
  for (long rank : r.floer_ranks.ranks) out << ' ' << rank;
  out << '\n';
  out << "  Euler characteristic    = " << r.euler_char << '\n';
  out << "  sigma(k_n) lower bound  = " << r.sigma_kn_lower_bound << '\n';
  out << "  sigma(k_n) exact        = "
      << (r.sigma_kn_exact ? std::to_string(*r.sigma_kn_exact) : "unknown") << '\n';
  out << "  lambda^tau lower bound  = " << r.lambda_tau_lower_bound << '\n';
  out << "  lambda^tau exact        = "
      << (r.lambda_tau_exact ? r.lambda_tau_exact->get_str() : "unknown") << '\n';
  out << "  Lefschetz(identity)     = " << r.lefschetz_identity << '\n';
  out << "  Lefschetz(tau_*) >=       " << r.lefschetz_tau_lower_bound << '\n';
  out << "  tau_* nontrivial        = " << (r.nontrivial ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace corkcalc
