#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "corkcalc/cli.hpp"
#include "corkcalc/report_io.hpp"

using namespace corkcalc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("conway") {
  const Run json = run({"conway", "--n", "1", "--format", "json"});
  CHECK(json.code == kExitOk);
  const Json terms = Json::parse(json.out);
  CHECK(terms.size() == 7);
  CHECK(laurent_from_json(terms) == conway_potential_L(1));

  const Run text = run({"conway", "--n", "1"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("(0, 0): -1\n") != std::string::npos);

  const Run csv = run({"--format", "csv", "conway", "--n", "2"});
  CHECK(csv.out.rfind("a,b,coefficient\n", 0) == 0);

  CHECK(run({"conway", "--n", "0"}).code == kExitUsage);
  CHECK(run({"conway"}).code == kExitUsage);
  CHECK(run({"conway", "--n", "101"}).code == kExitUsage);
  CHECK(run({"--limit", "200", "conway", "--n", "101", "--format", "json"}).code == kExitOk);
}

TEST_CASE("casson") {
  const Run r = run({"casson", "--n", "3", "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["lambda"] == "-20");
  CHECK(run({"casson", "--n", "10"}).out == "lambda(Sigma_10) = -440\n");
}

TEST_CASE("verdict") {
  const Run r = run({"verdict", "--n", "1", "--format", "json"});
  CHECK(r.code == kExitOk);
  const Json report = Json::parse(r.out);
  CHECK_FALSE(report_schema_violation(report).has_value());
  CHECK(report["nontrivial"] == true);
  CHECK(report["lambda"] == "-2");

  CHECK(run({"verdict", "--n", "1"}).out.find("tau_* nontrivial        = true") != std::string::npos);
  CHECK(run({"verdict", "--n", "-1"}).code == kExitUsage);
}

TEST_CASE("sweep") {
  const Run csv = run({"sweep", "--max-n", "4", "--format", "csv"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out ==
        "n,lambda,euler_char,sigma_lower_bound,sigma_exact,lambda_tau_lower_bound,lambda_tau_exact,nontrivial\n"
        "1,-2,-4,0,16,0/1,2/1,true\n"
        "2,-8,-16,-14,16,-7/4,2/1,true\n"
        "3,-20,-40,0,48,0/1,6/1,true\n"
        "4,-40,-80,-22,48,-11/4,6/1,true\n");

  const Run json = run({"sweep", "--max-n", "6", "--format", "json", "--threads", "3"});
  const Json all = Json::parse(json.out);
  REQUIRE(all.size() == 6);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i]["n"] == i + 1);
    CHECK_FALSE(report_schema_violation(all[i]).has_value());
  }
  CHECK(run({"sweep", "--max-n", "6", "--format", "json", "--threads", "1"}).out == json.out);

  CHECK(run({"sweep", "--max-n", "0"}).code == kExitUsage);
  CHECK(run({"--limit", "5", "sweep", "--max-n", "6"}).code == kExitUsage);
}

TEST_CASE("signature") {
  const Run torus = run({"signature", "torus", "6", "5", "--format", "json"});
  CHECK(torus.code == kExitOk);
  CHECK(Json::parse(torus.out) == Json::parse(R"({"p":6,"q":5,"sigma_paper_convention":16,"sigma_standard":-16})"));
  CHECK(run({"signature", "torus", "10", "9"}).out == "sigma(T(10,9)) = 48 (paper convention)\n");
  CHECK(run({"--standard-convention", "signature", "torus", "10", "9"}).out ==
        "sigma(T(10,9)) = -48 (standard convention)\n");
  CHECK(run({"signature", "torus", "4", "6"}).code == kExitUsage);
  CHECK(run({"--paper-convention", "--standard-convention", "signature", "torus", "2", "3"}).code ==
        kExitUsage);

  const Run kn = run({"signature", "kn", "3", "--format", "json"});
  CHECK(kn.code == kExitOk);
  const Json k3 = Json::parse(kn.out);
  CHECK(k3["torus_knot"] == Json::array({10, 9}));
  CHECK(k3["sigma_kn_exact"] == 48);
  CHECK(k3["sigma_kn_lower_bound"] == 0);
  CHECK(Json::parse(run({"signature", "kn", "--n", "6", "--format", "json"}).out)["sigma_kn_exact"].is_null());
  CHECK(run({"signature", "kn"}).code == kExitUsage);
  CHECK(run({"signature"}).code == kExitUsage);
}

TEST_CASE("selfcheck") {
  const Run clean = run({"selfcheck"});
  CHECK(clean.code == kExitOk);
  CHECK(clean.out.find("FAIL") == std::string::npos);

  for (const char* fault : {"g1-sign", "det-b"}) {
    const Run broken = run({"selfcheck", "--inject-fault", fault});
    CHECK(broken.code == kExitCheckFailed);
    CHECK(broken.out.find("FAIL casson_anchor_n1") != std::string::npos);
  }
  CHECK(run({"selfcheck", "--inject-fault", "nonsense"}).code == kExitUsage);
}

TEST_CASE("usage and help") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "casson", "--n", "1"}).code == kExitUsage);
  const Run help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("sweep") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"conway", "--n", "3", "--format", "json"},
           {"sweep", "--max-n", "5"},
           {"signature", "kn", "2"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
