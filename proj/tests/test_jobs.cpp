#include "hitchin/jobs.hpp"

#include <doctest.h>

using namespace hitchin;
using hitchin::jobs::json;

namespace {
const jobs::Options kOpt{};
}

TEST_CASE("info report") {
  json out = jobs::cmd_info("A", 2, kOpt);
  CHECK(out["dim"] == 8);
  CHECK(out["degrees"] == json::array({2, 3}));
  CHECK(out["weylOrder"] == 6);
  CHECK(out.contains("config"));
  CHECK_THROWS_AS(jobs::cmd_info("A", 0, kOpt), std::domain_error);
  CHECK_THROWS_AS(jobs::cmd_info("AB", 1, kOpt), jobs::SchemaError);
}

TEST_CASE("dims report") {
  json out = jobs::cmd_dims("A", 1, 4, kOpt);
  CHECK(out["dimB"] == 5);
  CHECK(out["dimB0"] == 1);
  CHECK(out["dimHiggs"] == 6);
}

TEST_CASE("hitchin job") {
  json job = json::parse(R"({
    "type": "A", "rank": 1,
    "divisor": [["0", 4]],
    "theta": [[["0"], ["1"]], [["1", "0", "-2"], ["0"]]]
  })");
  json out = jobs::cmd_hitchin(job, kOpt);
  CHECK(out["coefficients"][0] == json::array({"-1", "0", "2"}));
  CHECK(out["spectralB"] == json::array({"1", "0", "-2"}));

  json bad = job;
  bad.erase("divisor");
  CHECK_THROWS_WITH_AS(jobs::cmd_hitchin(bad, kOpt), doctest::Contains("$.divisor"),
                       jobs::SchemaError);
  json badTheta = job;
  badTheta["theta"][0][0] = json::array({"x"});
  CHECK_THROWS_AS(jobs::cmd_hitchin(badTheta, kOpt), jobs::SchemaError);
}

TEST_CASE("generic job") {
  json job = json::parse(R"({"divisor": [["0", 4]], "b": ["4", "0", "-5", "0", "1"]})");
  json out = jobs::cmd_generic(job, kOpt);
  CHECK(out["ok"] == true);
  CHECK(out["branchCount"] == 4);

  job["b"] = json::array({"1", "-2", "1"});
  json rej = jobs::cmd_generic(job, kOpt);
  CHECK(rej["ok"] == false);
  CHECK(rej.contains("reason"));
}

TEST_CASE("jets job") {
  json out = jobs::cmd_jets("vars x,y; x^2 - y^3", 1, kOpt);
  CHECK(out["variables"] == json::array({"x_0", "x_1", "y_0", "y_1"}));
  REQUIRE(out["equations"].size() == 2);
  CHECK(out["equations"][0]["equation"] == "x_0^2 - y_0^3");
  CHECK(out["equations"][1]["equation"] == "2*x_0*x_1 - 3*y_0^2*y_1");
  CHECK_THROWS_AS(jobs::cmd_jets("vars x; x +", 1, kOpt), ParseError);
}

TEST_CASE("cech job with pairing and gram") {
  json job = json::parse(R"({
    "type": "A", "rank": 1,
    "divisor": [["0", 4]],
    "theta": [[["0", "0", "1"], ["4", "0", "-6"]], [["1"], ["0", "0", "-1"]]]
  })");
  json out = jobs::cmd_cech(job, /*withGram=*/true, kOpt);
  CHECK(out["h0"] == 0);
  CHECK(out["h1"] == 6);
  CHECK(out["identityOk"] == true);
  CHECK(out["gram"].size() == 6);
  CHECK(out["gramDet"] != "0");
  CHECK(out["poissonRank"] == 2);

  // Standalone dimension job via m, no divisor.
  json mjob = json::parse(R"({"type": "A", "rank": 2, "m": 0, "theta":
    [[["0"], ["1"], ["0"]], [["0"], ["0"], ["0"]], [["0"], ["0"], ["0"]]]})");
  json dims = jobs::cmd_cech(mjob, false, kOpt);
  CHECK(dims["eulerNeg"] == 0);
}

TEST_CASE("cubic job") {
  json job = json::parse(R"({
    "divisor": [["0", 4]],
    "b": ["4", "0", "-5", "0", "1"],
    "bdot": ["0", "0", "0", "0", "1"]
  })");
  json out = jobs::cmd_cubic(job, kOpt);
  CHECK(out["genus"] == 1);
  CHECK(out["tensor"][0][0][0] == "10/9");
  CHECK(out["value"] == "5/9");

  jobs::Options fopt = kOpt;
  fopt.mode = "float";
  json fout = jobs::cmd_cubic(job, fopt);
  CHECK(fout["value"].contains("re"));

  json bad = job;
  bad["b"] = json::array({"1", "-2", "1"});
  CHECK_THROWS_AS(jobs::cmd_cubic(bad, kOpt), std::domain_error);  // genericity failure
}

TEST_CASE("periods job and determinism") {
  json job = json::parse(R"({"b": ["4", "0", "-5", "0", "1"], "bdot": ["0","0","0","0","1"]})");
  json a = jobs::cmd_periods(job, kOpt);
  json b = jobs::cmd_periods(job, kOpt);
  CHECK(a.dump() == b.dump());
  CHECK(a["genus"] == 1);
  CHECK(a["imPositiveDefinite"] == true);
  CHECK(a.contains("dtau"));
  double im = std::stod(a["tau"][0][0]["im"].get<std::string>());
  CHECK(im > 0.0);
}

TEST_CASE("verify rejects unknown suites") {
  CHECK_THROWS_AS(jobs::cmd_verify("nonsense", kOpt), jobs::SchemaError);
}
