#include "corkcalc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>

#include "corkcalc/casson.hpp"
#include "corkcalc/conway_family.hpp"
#include "corkcalc/errors.hpp"
#include "corkcalc/floer_report.hpp"
#include "corkcalc/report_io.hpp"
#include "corkcalc/selfcheck.hpp"
#include "corkcalc/signature.hpp"

namespace corkcalc {
namespace {

enum class OutputFormat { text, json, csv };

struct Settings {
  OutputFormat format = OutputFormat::text;
  int limit = 100;
  bool standard_convention = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_in_range(int n, const Settings& settings, const char* flag) {
  if (n < 1) throw UsageError(std::string(flag) + " must be >= 1");
  if (n > settings.limit) {
    throw UsageError(std::string(flag) + " = " + std::to_string(n) + " exceeds the limit " +
                     std::to_string(settings.limit) + " (raise it with --limit)");
  }
}

void cmd_conway(int n, const Settings& s, std::ostream& out) {
  require_in_range(n, s, "--n");
  const LaurentPoly2 f = conway_potential_L(n);
  switch (s.format) {
    case OutputFormat::json:
      out << laurent_to_json(f).dump() << '\n';
      break;
    case OutputFormat::csv:
      out << "a,b,coefficient\n";
      for (const auto& [e, c] : f.terms()) out << e.x << ',' << e.y << ',' << to_fraction_string(c) << '\n';
      break;
    case OutputFormat::text:
      out << "nabla_L" << n << "(x, y), " << f.size() << " terms, (a, b): coefficient of x^a y^b\n";
      for (const auto& [e, c] : f.terms()) out << '(' << e.x << ", " << e.y << "): " << c << '\n';
      break;
  }
}

void cmd_casson(int n, const Settings& s, std::ostream& out) {
  require_in_range(n, s, "--n");
  const std::string lambda = to_integer_string(casson_invariant(n));
  switch (s.format) {
    case OutputFormat::json: {
      Json j;
      j["n"] = n;
      j["lambda"] = lambda;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "n,lambda\n" << n << ',' << lambda << '\n';
      break;
    case OutputFormat::text:
      out << "lambda(Sigma_" << n << ") = " << lambda << '\n';
      break;
  }
}

const char* convention_name(const Settings& s) { return s.standard_convention ? "standard" : "paper"; }

void cmd_signature_torus(int p, int q, const Settings& s, std::ostream& out) {
  const TorusKnotSpec spec{p, q};
  const int standard = torus_signature_standard(spec);
  const int reported = torus_signature(spec);
  switch (s.format) {
    case OutputFormat::json: {
      Json j;
      j["p"] = p;
      j["q"] = q;
      j["sigma_paper_convention"] = reported;
      j["sigma_standard"] = standard;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "p,q,sigma_paper_convention,sigma_standard\n"
          << p << ',' << q << ',' << reported << ',' << standard << '\n';
      break;
    case OutputFormat::text:
      out << "sigma(T(" << p << "," << q << ")) = " << (s.standard_convention ? standard : reported)
          << " (" << convention_name(s) << " convention)\n";
      break;
  }
}

void cmd_signature_kn(int n, const Settings& s, std::ostream& out) {
  require_in_range(n, s, "n");
  const TorusKnotSpec torus = torus_knot_for_kn(n);
  const int torus_sigma = torus_signature(torus);
  const int lower = kn_signature_lower_bound(n);
  std::optional<int> exact;
  if (n <= kKnownExactSignatureMax) exact = kn_signature_exact(n);

  switch (s.format) {
    case OutputFormat::json: {
      Json j;
      j["n"] = n;
      j["torus_knot"] = Json::array({torus.p, torus.q});
      j["sigma_torus_paper_convention"] = torus_sigma;
      j["sigma_torus_standard"] = -torus_sigma;
      j["sigma_kn_lower_bound"] = lower;
      j["sigma_kn_exact"] = exact ? Json(*exact) : Json(nullptr);
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "n,torus_p,torus_q,sigma_torus,sigma_kn_lower_bound,sigma_kn_exact\n"
          << n << ',' << torus.p << ',' << torus.q << ',' << torus_sigma << ',' << lower << ','
          << (exact ? std::to_string(*exact) : "") << '\n';
      break;
    case OutputFormat::text: {
      // The standard convention negates every signature, turning the lower bound into an upper one.
      const int sign = s.standard_convention ? -1 : 1;
      out << "k_" << n << " (" << convention_name(s) << " convention)\n";
      out << "  comparison torus knot  T(" << torus.p << "," << torus.q << "), sigma = " << sign * torus_sigma
          << '\n';
      out << "  sigma(k_" << n << ") " << (s.standard_convention ? "<= " : ">= ") << sign * lower << '\n';
      out << "  sigma(k_" << n << ") exact  " << (exact ? std::to_string(sign * *exact) : "unknown") << '\n';
      break;
    }
  }
}

void emit_reports(const std::vector<VerdictReport>& reports, bool as_array, const Settings& s,
                  std::ostream& out) {
  switch (s.format) {
    case OutputFormat::json: {
      if (!as_array) {
        out << report_to_json(reports.front()).dump() << '\n';
        break;
      }
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(report_to_json(r));
      out << all.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << csv_header() << '\n';
      for (const auto& r : reports) out << report_to_csv_row(r) << '\n';
      break;
    case OutputFormat::text:
      for (const auto& r : reports) out << report_to_text(r);
      break;
  }
}

int cmd_selfcheck(const std::string& fault, std::ostream& out) {
  SelfCheckFaults faults;
  if (fault == "g1-sign") faults.flip_g1_sign = true;
  if (fault == "det-b") faults.flip_det_b = true;
  const auto results = run_selfcheck(faults);
  int failed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      out << "PASS " << r.name << '\n';
    } else {
      ++failed;
      out << "FAIL " << r.name << ": " << r.detail << '\n';
    }
  }
  out << (results.size() - static_cast<std::size_t>(failed)) << '/' << results.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of the cork boundaries Sigma_n", "corkcalc"};
  app.require_subcommand(1);
  Settings settings;

  const std::map<std::string, OutputFormat> formats = {
      {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
  app.add_option("--format", settings.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--limit", settings.limit, "Largest n accepted by any command")
      ->check(CLI::PositiveNumber);
  auto* paper_flag = app.add_flag("--paper-convention", "Report signatures with positive torus knots positive (default)");
  app.add_flag("--standard-convention", settings.standard_convention,
               "Report signatures in the standard convention")
      ->excludes(paper_flag);
  app.fallthrough();

  int n = 0;
  auto* conway = app.add_subcommand("conway", "Conway potential function of L_n");
  conway->add_option("--n", n, "Family index")->required();

  auto* casson = app.add_subcommand("casson", "Casson invariant of Sigma_n");
  casson->add_option("--n", n, "Family index")->required();

  auto* signature = app.add_subcommand("signature", "Knot signatures");
  signature->require_subcommand(1);
  int p = 0, q = 0;
  auto* torus = signature->add_subcommand("torus", "Signature of the torus knot T(p,q)");
  torus->add_option("p", p)->required();
  torus->add_option("q", q)->required();
  auto* kn = signature->add_subcommand("kn", "Signature data for the branch knot k_n");
  std::optional<int> kn_positional, kn_flag;
  auto* kn_pos_opt = kn->add_option("index", kn_positional, "Family index n");
  kn->add_option("--n", kn_flag, "Family index")->excludes(kn_pos_opt);

  auto* verdict = app.add_subcommand("verdict", "Non-triviality report for tau_* on I_*(Sigma_n)");
  verdict->add_option("--n", n, "Family index")->required();

  int max_n = 0;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Reports for n = 1 .. max-n");
  sweep->add_option("--max-n", max_n, "Largest index")->required();
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::string fault;
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the built-in invariant suite");
  selfcheck->add_option("--inject-fault", fault)
      ->check(CLI::IsMember({"g1-sign", "det-b"}))
      ->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*conway) {
      cmd_conway(n, settings, out);
    } else if (*casson) {
      cmd_casson(n, settings, out);
    } else if (*torus) {
      cmd_signature_torus(p, q, settings, out);
    } else if (*kn) {
      if (!kn_positional && !kn_flag) throw UsageError("signature kn needs an index");
      cmd_signature_kn(kn_positional ? *kn_positional : *kn_flag, settings, out);
    } else if (*verdict) {
      require_in_range(n, settings, "--n");
      emit_reports({nontriviality_verdict(n)}, false, settings, out);
    } else if (*sweep) {
      require_in_range(max_n, settings, "--max-n");
      emit_reports(sweep_verdicts(max_n, threads), true, settings, out);
    } else if (*selfcheck) {
      return cmd_selfcheck(fault, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace corkcalc
