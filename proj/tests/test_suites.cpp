#include <doctest.h>

#include <json.hpp>
#include <set>

#include "kappa/suites.hpp"

using namespace kappa;
using nlohmann::json;

namespace {

// Structural validation against schema/report.schema.json.
void check_schema(const json& j) {
  REQUIRE(j.is_object());
  CHECK(j.size() == 3);
  REQUIRE(j.contains("suite"));
  CHECK(j["suite"].is_string());
  REQUIRE(j.contains("params"));
  const json& p = j["params"];
  CHECK(p.size() == 4);
  CHECK(p["n"].is_number_integer());
  CHECK(p["metric"].is_string());
  CHECK(p["maxDegree"].is_number_integer());
  CHECK(p["seed"].is_number_integer());
  REQUIRE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    CHECK(c.size() == 3);
    CHECK(c["name"].is_string());
    CHECK(c["detail"].is_string());
    const std::string s = c["status"];
    CHECK((s == "pass" || s == "fail" || s == "skipped"));
  }
}

std::set<std::string> failing_from_text(const std::string& text) {
  std::set<std::string> out;
  std::size_t pos = 0;
  while ((pos = text.find("\nfail  ", pos)) != std::string::npos) {
    pos += 7;
    out.insert(text.substr(pos, text.find("  ", pos) - pos));
  }
  return out;
}

}  // namespace

TEST_CASE("parameter validation") {
  SuiteParams p;
  p.n = 3;
  CHECK(resolve(p).metric == "+--");
  p.n = 1;
  CHECK_THROWS_AS(resolve(p), std::invalid_argument);
  p.n = 3;
  p.metric = "+-";
  CHECK_THROWS_AS(resolve(p), std::invalid_argument);
  p.metric = "";
  p.max_degree = 0;
  CHECK_THROWS_AS(resolve(p), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("no-such-suite", SuiteParams{}), std::invalid_argument);
}

TEST_CASE("reports are sorted and schema-stable") {
  SuiteParams p;
  p.n = 2;
  p.max_degree = 3;
  const Report r = run_suite("calculus-check", p);
  CHECK(r.ok());
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; }));
  const SuiteParams rp = resolve(p);
  const json j = json::parse(render_json(r, rp));
  check_schema(j);
  CHECK(j["params"]["metric"] == "+-");
  CHECK(j["checks"].size() == r.checks.size());
  const std::string text = render_text(r, rp);
  CHECK(text.rfind("suite: calculus-check\nparams: n=2 metric=+- maxDegree=3 seed=12345\n", 0) == 0);
}

TEST_CASE("text and json agree on failures") {
  SuiteParams p;
  p.n = 2;
  p.metric = "-+";
  p.max_degree = 2;
  const SuiteParams rp = resolve(p);
  const Report r = run_suite("calculus-check", rp);
  CHECK_FALSE(r.ok());
  std::set<std::string> from_json;
  const json j = json::parse(render_json(r, rp));
  for (const auto& c : j["checks"])
    if (c["status"] == "fail") from_json.insert(c["name"].get<std::string>());
  CHECK(from_json == failing_from_text(render_text(r, rp)));
  CHECK(from_json.size() == r.failures());
  CHECK(from_json.count("calculus.d.relations") == 1);
}

TEST_CASE("runs are deterministic") {
  SuiteParams p;
  p.n = 2;
  p.max_degree = 2;
  const SuiteParams rp = resolve(p);
  CHECK(render_json(run_suite("full-suite", rp), rp) == render_json(run_suite("full-suite", rp), rp));
}
