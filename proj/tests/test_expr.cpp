#include <doctest.h>

#include "kappa/expr.hpp"
#include "support.hpp"

using namespace kt;

namespace {

std::string norm(const ExpressionContext& ctx, const std::string& s) { return to_string(parse_expression(s, ctx), ctx); }

}  // namespace

TEST_CASE("parsing and printing") {
  const ExpressionContext ctx(Metric::standard(2));
  CHECK(norm(ctx, "x1*x0") == "x0*x1 - i*k^-1*x1");
  CHECK(as_minkowski(parse_expression("phi", ctx), ctx) == ctx.minkowski().phi());
  CHECK(norm(ctx, "L[0,1]*a[0]") == "-i*k^-1*L[0,0]*L[0,1] + a[0]*L[0,1]");
  CHECK(norm(ctx, "x0 * t1") == "x0*t1");
  CHECK(norm(ctx, "t0*x1") == "x1*t0 + i*k^-1*t1");
  CHECK(norm(ctx, "k^-2*x0 - 3/2") == "k^-2*x0 - 3/2");
  CHECK(norm(ctx, "(x0 + x1)^2 - x0^2 - x1^2 - 2*x0*x1") == "-i*k^-1*x1");
  CHECK(norm(ctx, "- i * tau") == "-i*tau");
  CHECK(norm(ctx, "k*k^-1") == "1");
}

TEST_CASE("parse errors") {
  const ExpressionContext ctx(Metric::standard(2));
  CHECK_THROWS_WITH_AS(parse_expression("x5", ctx), "index 5 out of range for n = 2 at position 1", ParseError);
  CHECK_THROWS_AS(parse_expression("y0", ctx), ParseError);
  CHECK_THROWS_AS(parse_expression("x0 +", ctx), ParseError);
  CHECK_THROWS_AS(parse_expression("(x0", ctx), ParseError);
  CHECK_THROWS_AS(parse_expression("1/0", ctx), ParseError);
  CHECK_THROWS_AS(parse_expression("L[0,2]", ctx), ParseError);
  CHECK_THROWS_AS(parse_expression("t0*t1", ctx), AlgebraError);
  CHECK_THROWS_AS(parse_expression("x0*a[0]", ctx), AlgebraError);
}

TEST_CASE("round trip of random elements and forms") {
  std::mt19937_64 rng(31337);
  for (std::size_t n : {2, 3, 4}) {
    const ExpressionContext ctx(Metric::standard(n));
    const auto& cal = ctx.calculus();
    for (int k = 0; k < 200; ++k) {
      const Element e = random_element(ctx.minkowski().presentation(), rng, 3, 4);
      REQUIRE(as_minkowski(parse_expression(e.to_string(), ctx), ctx) == e);
      const Element p = random_element(ctx.poincare().presentation(), rng, 2, 3);
      const Value pv = parse_expression(p.to_string(), ctx);
      if (pv.element) REQUIRE(*pv.element == p);
      OneForm f = cal.zero();
      for (std::size_t b = 0; b < cal.basis_size(); ++b)
        f += cal.basis(b, random_element(ctx.minkowski().presentation(), rng, 2, 3));
      REQUIRE(as_form(parse_expression(cal.to_string(f), ctx), ctx) == f);
    }
  }
}
