#include "doctest.h"
#include "kappa/verify.hpp"

using namespace kappa;

TEST_CASE("every suite passes on a small run in both modes") {
  for (FieldMode mode : {FieldMode::Rational, FieldMode::Float}) {
    VerifyConfig c;
    c.trials = 200;
    c.seed = 5;
    for (const std::string& name : suite_names()) {
      const SuiteReport r = run_suite(name, c, mode);
      INFO(name << " " << to_string(mode));
      CHECK(r.passed());
      CHECK(r.trials > 0);
    }
  }
}

TEST_CASE("rational runs never report a residual; float runs always do") {
  VerifyConfig c;
  c.trials = 20;
  for (const SuiteReport& r : run_all(c)) {
    CHECK(r.max_residual.has_value() == (r.field == FieldMode::Float));
  }
}

TEST_CASE("exact-only suites run once") {
  VerifyConfig c;
  c.trials = 4;
  c.suites = {"table", "composition"};
  const auto reports = run_all(c);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].suite == "table");
  CHECK(reports[1].field == FieldMode::Rational);
  CHECK(reports[2].field == FieldMode::Float);
  c.modes = {FieldMode::Float};
  CHECK(run_all(c).size() == 2);
}

TEST_CASE("unknown suites and empty modes are rejected") {
  VerifyConfig c;
  c.suites = {"nope"};
  CHECK_THROWS_AS(run_all(c), ContractViolation);
  c.suites = {};
  c.modes = {};
  CHECK_THROWS_AS(run_all(c), ContractViolation);
}

TEST_CASE("reports are deterministic and omit timing by default") {
  VerifyConfig c;
  c.trials = 50;
  c.seed = 42;
  const auto a = run_all(c);
  const auto b = run_all(c);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(report_to_json(a[i]).dump() == report_to_json(b[i]).dump());
  }
  CHECK_FALSE(report_to_json(a[0]).contains("elapsed_ms"));
  CHECK(report_to_json(a[0], true).contains("elapsed_ms"));
}

TEST_CASE("a different seed draws different trials") {
  const auto a = suite_composition(10, 1, FieldMode::Float);
  const auto b = suite_composition(10, 2, FieldMode::Float);
  CHECK(a.max_residual != b.max_residual);
}

TEST_CASE("zero-divisor walkthrough values") {
  const SuiteReport r = suite_zero_divisor(FieldMode::Rational);
  CHECK(r.passed());
  bool saw_f = false;
  for (const auto& [k, v] : r.details) {
    if (k.rfind("f_K(X), f_K(Y)", 0) == 0) {
      CHECK(v == "1/2, -1/2");
      saw_f = true;
    }
    if (k.rfind("||XY||", 0) == 0) CHECK(v == "0");
  }
  CHECK(saw_f);
}

TEST_CASE("summary table has one row per report") {
  VerifyConfig c;
  c.trials = 2;
  c.suites = {"tower", "associativity"};
  const auto reports = run_all(c);
  const std::string s = summary_table(reports, false);
  CHECK(std::count(s.begin(), s.end(), '\n') == static_cast<long>(reports.size()) + 1);
  CHECK(s.find("time_s") == std::string::npos);
}
