#include <doctest.h>

#include <cstring>
#include <json.hpp>
#include <string>

#include "kappa/kappa.h"

namespace {

struct Context {
  explicit Context(int n, const char* metric = nullptr) { REQUIRE(kappa_context_create(n, metric, &ctx) == KAPPA_OK); }
  ~Context() { kappa_context_destroy(ctx); }
  kappa_context* ctx = nullptr;
};

std::string take(char* s) {
  std::string out(s);
  kappa_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("context lifecycle") {
  kappa_context* ctx = nullptr;
  CHECK(kappa_context_create(1, nullptr, &ctx) == KAPPA_ERR_ARGUMENT);
  CHECK(ctx == nullptr);
  CHECK(std::strlen(kappa_last_error()) > 0);
  CHECK(kappa_context_create(3, "+-", &ctx) == KAPPA_ERR_ARGUMENT);
  CHECK(kappa_context_create(2, nullptr, nullptr) == KAPPA_ERR_ARGUMENT);
  Context c(4);
  CHECK(kappa_context_dimension(c.ctx) == 4);
  CHECK(std::string(kappa_status_string(KAPPA_ERR_PARSE)) == "parse error");
}

TEST_CASE("expression operations") {
  Context c(2);
  char* out = nullptr;
  REQUIRE(kappa_normalize(c.ctx, "x1*x0", &out) == KAPPA_OK);
  CHECK(take(out) == "x0*x1 - i*k^-1*x1");
  REQUIRE(kappa_commutator(c.ctx, "x0", "x1", &out) == KAPPA_OK);
  CHECK(take(out) == "i*k^-1*x1");
  REQUIRE(kappa_differential(c.ctx, "x0*x1", &out) == KAPPA_OK);
  CHECK(take(out) == "x1*t0 + (x0 + i*k^-1)*t1");
  REQUIRE(kappa_differential(c.ctx, "x0*t1", &out) == KAPPA_OK);
  CHECK(take(out) == "t0^t1");
  REQUIRE(kappa_wedge(c.ctx, "t1", "t0", &out) == KAPPA_OK);
  CHECK(take(out) == "-t0^t1");
  REQUIRE(kappa_coact(c.ctx, "x0", &out) == KAPPA_OK);
  CHECK(take(out) == "L[0,1] (x) x1 + L[0,0] (x) x0 + a[0] (x) 1");
  REQUIRE(kappa_coact(c.ctx, "tau", &out) == KAPPA_OK);
  CHECK(take(out) == "(1 (x) 1)*tau");
}

TEST_CASE("error codes") {
  Context c(2);
  char* out = nullptr;
  CHECK(kappa_normalize(c.ctx, "x5", &out) == KAPPA_ERR_PARSE);
  CHECK(std::string(kappa_last_error()) == "index 5 out of range for n = 2 at position 1");
  CHECK(out == nullptr);
  CHECK(kappa_normalize(c.ctx, "t0*t1", &out) == KAPPA_ERR_ALGEBRA);
  CHECK(kappa_wedge(c.ctx, "a[0]", "t0", &out) == KAPPA_ERR_ALGEBRA);
  CHECK(kappa_normalize(nullptr, "x0", &out) == KAPPA_ERR_ARGUMENT);
  CHECK(out == nullptr);
}

TEST_CASE("suite runner") {
  char* report = nullptr;
  int failures = -1;
  REQUIRE(kappa_run_suite("hopf-check", 2, nullptr, 2, 12345, KAPPA_FORMAT_JSON, &report, &failures) == KAPPA_OK);
  const auto j = nlohmann::json::parse(take(report));
  CHECK(failures == 0);
  CHECK(j["suite"] == "hopf-check");
  CHECK(j["params"]["maxDegree"] == 2);
  CHECK(kappa_run_suite("bogus", 2, nullptr, 2, 1, KAPPA_FORMAT_TEXT, &report, &failures) == KAPPA_ERR_ARGUMENT);
  CHECK(kappa_run_suite("hopf-check", 2, nullptr, 0, 1, KAPPA_FORMAT_TEXT, &report, &failures) == KAPPA_ERR_ARGUMENT);
}
