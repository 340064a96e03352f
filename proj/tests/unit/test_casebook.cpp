#include <doctest.h>

#include <set>

#include "wonderkit/casebook.hpp"
#include "wonderkit/errors.hpp"

using namespace wk;

TEST_CASE("catalog") {
  const auto cases = list_cases();
  CHECK(cases.size() == 14);
  std::set<std::string> ids;
  for (const auto& c : cases) ids.insert(c.id);
  CHECK(ids.size() == cases.size());
  CHECK(ids.count("e8-weyl-order") == 1);
  CHECK_THROWS_AS(run_case("no-such-case"), InvalidInput);
}

TEST_CASE("every case passes with the default seed") {
  for (const auto& r : run_all()) {
    INFO(to_text(r));
    CHECK(r.pass());
    CHECK_FALSE(r.checks.empty());
  }
}

TEST_CASE("sampled cases are seed-deterministic") {
  CHECK(dump(to_json(run_case("og-orbits", 7))) == dump(to_json(run_case("og-orbits", 7))));
  CHECK(run_case("og-orbits", 8).pass());
}

TEST_CASE("report formats") {
  const CaseReport r = run_case("e8-weyl-order");
  const std::string text = to_text(r);
  CHECK(text.rfind("PASS e8-weyl-order: ", 0) == 0);
  CHECK(text.find("696729600") != std::string::npos);
  const Json j = to_json(r);
  CHECK(j.at("verdict") == "pass");
  CHECK(j.at("case") == "e8-weyl-order");
  for (const auto& c : j.at("checks")) {
    CHECK(c.contains("source"));
    CHECK(c.at("pass") == true);
  }
}

TEST_CASE("verdicts") {
  CaseReport empty{"x", "nothing checked", Json::object(), {}};
  CHECK_FALSE(empty.pass());
  CaseReport bad{"y", "one wrong value", Json::object(), {{"value", 1, 2, Source::elementary}}};
  CHECK_FALSE(bad.pass());
  CHECK(to_text(bad).find("FAIL value: 1 (expected 2) [elementary]") != std::string::npos);
  CHECK(to_json(bad).at("verdict") == "fail");
}

TEST_CASE("Hermitian symmetric space table") {
  CHECK(ihss_table().size() == 6);
  CHECK(ihss_lookup("E_7/P_7").vmrt == "E_6/P_1");
  CHECK(ihss_lookup("Q^r").rank == "2");
  CHECK_THROWS_AS(ihss_lookup("A_1/P_1"), InvalidInput);
}
