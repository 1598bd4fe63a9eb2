#include <doctest.h>

#include "kappa/coaction.hpp"
#include "support.hpp"

using namespace kt;

namespace {

struct Fixture {
  Metric g = Metric::standard(2);
  Coaction c{MinkowskiAlgebra(g), PoincareAlgebra(g)};
  const MinkowskiAlgebra& m = c.minkowski();
  const PoincareAlgebra& P = c.poincare();
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "left coaction on generators and products") {
  const Element Im = m.one(), Ip = P.one();
  for (std::size_t mu = 0; mu < 2; ++mu) {
    TensorElement expect = TensorElement::pure({P.a(mu), Im});
    for (std::size_t nu = 0; nu < 2; ++nu) expect += TensorElement::pure({P.lambda(mu, nu), m.x(nu)});
    CHECK(c.rho_L(m.x(mu)) == expect);
  }
  CHECK(c.rho_L(Im) == TensorElement::pure({Ip, Im}));

  // four cross terms of (L^0_a (x) x^a + a^0 (x) I)(L^1_b (x) x^b + a^1 (x) I)
  TensorElement expect = TensorElement::pure({P.a(0) * P.a(1), Im});
  for (std::size_t al = 0; al < 2; ++al) {
    expect += TensorElement::pure({P.lambda(0, al) * P.a(1), m.x(al)});
    expect += TensorElement::pure({P.a(0) * P.lambda(1, al), m.x(al)});
    for (std::size_t be = 0; be < 2; ++be)
      expect += TensorElement::pure({P.lambda(0, al) * P.lambda(1, be), m.x(al) * m.x(be)});
  }
  CHECK(c.rho_L(m.x(0) * m.x(1)) == expect);
}

TEST_CASE_FIXTURE(Fixture, "universal differential") {
  const Element I = m.one();
  CHECK(universal_d(m.x(0)).value() == TensorElement::pure({I, m.x(0)}) - TensorElement::pure({m.x(0), I}));
  CHECK(universal_d(I).is_zero());
  const Element x01 = m.x(0) * m.x(1);
  CHECK(universal_d(x01).value() == TensorElement::pure({I, x01}) - TensorElement::pure({x01, I}));
}

TEST_CASE_FIXTURE(Fixture, "omega on ker eps") {
  const Element I = m.one(), x0 = m.x(0), x1 = m.x(1), x01 = x0 * x1;
  for (std::size_t mu = 0; mu < 2; ++mu) CHECK(omega_univ(m.x(mu)) == universal_d(m.x(mu)));
  // S(x0x1) (x) I + S(x0) (x) x1 + S(x1) (x) x0 + I (x) x0x1, with S(x0x1) = x1x0
  const TensorElement expect = TensorElement::pure({x1 * x0, I}) - TensorElement::pure({x0, x1}) -
                               TensorElement::pure({x1, x0}) + TensorElement::pure({I, x01});
  CHECK(omega_univ(x01).value() == expect);
  CHECK_THROWS_AS(omega_univ(I), AlgebraError);
}

TEST_CASE_FIXTURE(Fixture, "lifted coaction") {
  const Element I = m.one();
  for (std::size_t mu = 0; mu < 2; ++mu) {
    TensorElement expect(std::vector<PresentationPtr>{P.presentation(), m.presentation(), m.presentation()}, {});
    for (std::size_t nu = 0; nu < 2; ++nu)
      expect += TensorElement::pure({P.lambda(mu, nu), I, m.x(nu)}) - TensorElement::pure({P.lambda(mu, nu), m.x(nu), I});
    CHECK(c.lift_rho_L(universal_d(m.x(mu))) == expect);
  }
  // property (i_L): lift(a q) = rho_L(a) lift(q)
  const auto q = m.x(0) * universal_d(m.x(1));
  const TensorElement lhs = c.lift_rho_L(q);
  const TensorElement rho = c.rho_L(m.x(0));
  const TensorElement rhs = insert_unit_factor(rho, 2, m.presentation()) * c.lift_rho_L(universal_d(m.x(1)));
  CHECK(lhs == rhs);
}

TEST_CASE_FIXTURE(Fixture, "projection onto M_kappa") {
  CHECK(c.pi(P.a(1)) == m.x(1));
  CHECK(c.pi(P.lambda(0, 1)).is_zero());
  CHECK(c.pi(P.lambda(0, 0)) == m.one());
  CHECK(c.pi(P.lambda(0, 0) * P.a(1)) == m.x(1));
}

TEST_CASE_FIXTURE(Fixture, "right self-coaction") {
  const Element I = m.one();
  for (std::size_t mu = 0; mu < 2; ++mu) {
    const TensorElement expect = TensorElement::pure({I, m.x(mu), I}) - TensorElement::pure({m.x(mu), I, I});
    CHECK(lift_rho_R_self(universal_d(m.x(mu)).value()) == expect);
  }
  CHECK(rho_R_self(I) == TensorElement::pure({I, I}));
}

TEST_CASE_FIXTURE(Fixture, "coaction axioms and covariance, n = 2") {
  const OrthoIdeal J(P, 6);
  const Report r = verify_coaction_suite(c, J, 3, 12345, 20);
  for (const auto& ch : r.checks) CHECK_MESSAGE(ch.status == Status::pass, ch.name << ": " << ch.detail);
  const Report cov = verify_x_munu_covariance(c, J);
  for (const auto& ch : cov.checks) CHECK_MESSAGE(ch.status == Status::pass, ch.name << ": " << ch.detail);
}
