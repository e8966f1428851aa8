#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liekit/report.hpp"
#include "liekit/suites.hpp"

#include <cmath>
#include <limits>

using namespace liekit;

TEST_CASE("check constructors") {
  CHECK(residual_check("a", 1e-12, 1e-10, "r").pass);
  CHECK_FALSE(residual_check("a", 1e-9, 1e-10, "r").pass);
  CHECK_FALSE(residual_check("a", std::numeric_limits<double>::quiet_NaN(), 1.0, "r").pass);
  CHECK(residual_check("exact", 0.0, 0.0, "r").pass);
  CHECK(lower_bound_check("order", 2.01, 1.9, "r").pass);
  CHECK_FALSE(lower_bound_check("order", 1.5, 1.9, "r").pass);
  CHECK_FALSE(lower_bound_check("order", std::numeric_limits<double>::infinity(), 1.9, "r").pass);
  const Check b = boolean_check("b", false, "r");
  CHECK(b.value == 1.0);
  CHECK_FALSE(b.pass);
}

TEST_CASE("check JSON encodes non-finite values as strings") {
  const auto j = to_json(residual_check("a", std::numeric_limits<double>::infinity(), 1e-10, "r"));
  CHECK(j["value"] == "inf");
  CHECK(j["bound"] == "upper");
  CHECK(to_json(lower_bound_check("o", 2, 1.9, "r"))["bound"] == "lower");
}

TEST_CASE("report passes and first failure") {
  Report r;
  r.suite = "x";
  r.findings.add(residual_check("ok", 0, 1, "r"));
  CHECK(r.passed());
  CHECK(r.first_failure() == nullptr);
  r.findings.add(residual_check("bad", 2, 1, "r"));
  r.findings.add(residual_check("worse", 3, 1, "r"));
  CHECK_FALSE(r.passed());
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->name == "bad");
  const auto j = to_json(r);
  CHECK(j["passed"] == false);
  CHECK(j["first_failure"] == "bad");
  CHECK(j["timestamp"].is_null());
  CHECK(dump_report(r).back() == '\n');
}

TEST_CASE("findings append nests data") {
  Findings a, b;
  b.add(boolean_check("c", true, "r"));
  b.data["k"] = 1;
  a.append(b, "sub");
  CHECK(a.checks.size() == 1u);
  CHECK(a.data["sub"]["k"] == 1);
}

TEST_CASE("timestamp is ISO 8601 UTC") {
  const std::string t = utc_timestamp();
  CHECK(t.size() == 20u);
  CHECK(t[10] == 'T');
  CHECK(t.back() == 'Z');
}

TEST_CASE("suite runner") {
  CHECK(suite_names().size() == 7u);
  CHECK_THROWS_AS(run_suite("nope"), UsageError);
  SuiteOptions bad;
  bad.tol = 0;
  CHECK_THROWS_AS(run_suite("finite", bad), UsageError);
  CHECK(default_tolerances(1e-10).at("algebraic") == 1e-10);
}

TEST_CASE("every fast suite passes and is deterministic") {
  for (const char* name : {"finite", "lie", "so3su2", "su3", "lorentz", "poincare"}) {
    CAPTURE(name);
    const Report a = run_suite(name);
    CHECK(a.passed());
    CHECK_FALSE(a.findings.checks.empty());
    CHECK(dump_report(a) == dump_report(run_suite(name)));
  }
}

TEST_CASE("the seed changes the random draws") {
  SuiteOptions s2;
  s2.seed = 2;
  const auto a = to_json(run_suite("so3su2"));
  const auto b = to_json(run_suite("so3su2", s2));
  CHECK(a["data"]["double_cover_samples"] != b["data"]["double_cover_samples"]);
}
