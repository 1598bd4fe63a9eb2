#include <doctest.h>

#include "kappa/calculus.hpp"
#include "support.hpp"

using namespace kt;

namespace {

struct Fixture {
  Metric g = Metric::standard(2);
  Calculus cal{MinkowskiAlgebra(g)};
  const MinkowskiAlgebra& m = cal.algebra();
  OneForm t(std::size_t b) const { return cal.basis(b); }
  OneForm t(std::size_t b, const Element& c) const { return cal.basis(b, c); }
  std::size_t tau = cal.tau_index();
};

TwoForm two(const Calculus& cal, std::size_t b, std::size_t c, const Element& coeff) {
  return cal.wedge(cal.basis(b, coeff), cal.basis(c));
}

}  // namespace

TEST_CASE_FIXTURE(Fixture, "basis names") {
  CHECK(cal.basis_size() == 3);
  CHECK(cal.basis_name(0) == "t0");
  CHECK(cal.basis_name(tau) == "tau");
  CHECK(cal.basis_index("t1") == 1);
  CHECK_THROWS_AS(cal.basis_index("t7"), AlgebraError);
}

TEST_CASE_FIXTURE(Fixture, "commutation rules, n = 2") {
  const Element x0 = m.x(0), x1 = m.x(1);
  // [t0, x0] = (i/k) t0 - (i/k) t0 + (1/n) tau
  CHECK(cal.right_mul(t(0), x0) == t(0, x0) + t(tau) * num(1, 2));
  CHECK(cal.right_mul(t(1), x0) == t(1, x0));
  // [tau, x1] = -(n/k^2) t1
  CHECK(cal.right_mul(t(tau), x1) == t(tau, x1) - t(1) * (num(2) * lam(2)));
  CHECK(cal.to_string(cal.right_mul(t(0), x0)) == "x0*t0 + 1/2*tau");
  CHECK(cal.to_string(cal.right_mul(t(tau), x1)) == "-2*k^-2*t1 + x1*tau");
}

TEST_CASE("commutation rules, n = 4") {
  const Calculus cal{MinkowskiAlgebra(Metric::standard(4))};
  const auto& m = cal.algebra();
  CHECK(cal.right_mul(cal.basis(0), m.x(0)) == cal.basis(0, m.x(0)) + cal.basis(4) * num(1, 4));
  // [t1, x1] = -(i/k) g^{11} t0 + (1/4) g^{11} tau
  CHECK(cal.right_mul(cal.basis(1), m.x(1)) == cal.basis(1, m.x(1)) + cal.basis(0) * il() - cal.basis(4) * num(1, 4));
  CHECK(cal.right_mul(cal.basis(4), m.x(2)) == cal.basis(4, m.x(2)) - cal.basis(2) * (num(4) * lam(2)));
}

TEST_CASE_FIXTURE(Fixture, "exterior derivative on functions") {
  const Element x0 = m.x(0), x1 = m.x(1);
  for (std::size_t mu = 0; mu < 2; ++mu) CHECK(cal.d0(m.x(mu)) == t(mu));
  CHECK(cal.d0(m.one()).is_zero());
  // d(x0 x1) = t0 x1 + x0 t1, and t0 x1 = x1 t0 + (i/k) t1
  CHECK(cal.d0(x0 * x1) == t(0, x1) + t(1, x0) + t(1) * il());
  CHECK(cal.to_string(cal.d0(x0 * x1)) == "x1*t0 + (x0 + i*k^-1)*t1");
  // d of [x0, x1] - (i/k) x1
  CHECK(cal.d0(commutator(x0, x1)) == t(1) * il());
  for (const auto& r : m.relations()) CHECK(cal.d0_raw(r.raw).is_zero());
}

TEST_CASE("tau from phi") {
  for (std::size_t n : {2, 3, 4}) {
    const Calculus cal{MinkowskiAlgebra(Metric::standard(n))};
    CHECK(cal.tau_from_phi() == cal.basis(cal.tau_index()));
    CHECK(cal.project(omega_univ(cal.algebra().phi())) == cal.basis(cal.tau_index()));
    for (std::size_t mu = 0; mu < n; ++mu) CHECK(cal.project(omega_univ(cal.algebra().x(mu))) == cal.basis(mu));
  }
}

TEST_CASE_FIXTURE(Fixture, "star on forms") {
  CHECK(cal.star(t(0)) == t(0));
  CHECK(cal.star(t(tau)) == t(tau) * num(-1));
  // (x1 t0)* = t0 x1 = x1 t0 + (i/k) t1
  CHECK(cal.star(t(0, m.x(1))) == t(0, m.x(1)) + t(1) * il());
  CHECK(cal.to_string(cal.star(t(0, m.x(1)))) == "x1*t0 + i*k^-1*t1");
}

TEST_CASE_FIXTURE(Fixture, "coaction on forms") {
  Coaction c{MinkowskiAlgebra(g), PoincareAlgebra(g)};
  const auto& P = c.poincare();
  const Element Im = m.one();
  for (std::size_t mu = 0; mu < 2; ++mu) {
    const CoactedForm f = coact_form(cal, c, t(mu));
    for (std::size_t nu = 0; nu < 2; ++nu) CHECK(f[nu] == TensorElement::pure({P.lambda(mu, nu), Im}));
    CHECK(f[tau].is_zero());
  }
  const CoactedForm ft = coact_form(cal, c, t(tau));
  CHECK(ft[tau] == TensorElement::pure({P.one(), Im}));
  // rho_L(x0) (L^1_nu (x) t^nu): coefficient of t^nu is rho_L(x0) (L^1_nu (x) I)
  const CoactedForm fx = coact_form(cal, c, t(1, m.x(0)));
  for (std::size_t nu = 0; nu < 2; ++nu) CHECK(fx[nu] == c.rho_L(m.x(0)) * TensorElement::pure({P.lambda(1, nu), Im}));
}

TEST_CASE_FIXTURE(Fixture, "flip and wedge") {
  const Element I = m.one();
  FormTensor t01;
  t01.add({0, 1}, I);
  FormTensor t10;
  t10.add({1, 0}, I);
  CHECK(cal.sigma(t01) == t10);
  FormTensor tt;
  tt.add({tau, tau}, I);
  CHECK(cal.sigma(tt) == tt);
  CHECK(cal.to_string(cal.wedge(t(0), t(1))) == "t0^t1");
  CHECK(cal.wedge(t(1), t(0)) == cal.wedge(t(0), t(1)) * num(-1));
  CHECK(cal.wedge(t(tau), t(tau)).is_zero());
  CHECK(cal.wedge(t(tau), t(0)) == cal.wedge(t(0), t(tau)) * num(-1));
  CHECK(cal.wedge(t(0), t(0)).is_zero());
}

TEST_CASE_FIXTURE(Fixture, "exterior derivative on one-forms") {
  for (std::size_t b = 0; b < cal.basis_size(); ++b) CHECK(cal.d1(t(b)).is_zero());
  CHECK(cal.d1_tau().is_zero());
  CHECK(cal.d1(t(1, m.x(0))) == two(cal, 0, 1, m.one()));
  CHECK(cal.d1(cal.d0(m.x(0) * m.x(1))).is_zero());
}

TEST_CASE("calculus suite") {
  for (std::size_t n : {2, 3}) {
    const Metric g = Metric::standard(n);
    const Coaction c{MinkowskiAlgebra(g), PoincareAlgebra(g)};
    const OrthoIdeal J(c.poincare(), 4);
    const Calculus cal{MinkowskiAlgebra(g)};
    const Report r = verify_calculus_suite(cal, c, J, 3, 7, 100);
    for (const auto& ch : r.checks) CHECK_MESSAGE(ch.status == Status::pass, ch.name << ": " << ch.detail);
  }
}

TEST_CASE("calculus is inconsistent when g^{00} = -1") {
  const Calculus cal{MinkowskiAlgebra(Metric::parse("-+"))};
  const auto& m = cal.algebra();
  // d of [x0, x1] - (i/k) x1 leaves (i/k)(g^{00} - 1) t1
  for (const auto& r : m.relations()) CHECK(cal.d0_raw(r.raw) == cal.basis(1) * (il() * num(-2)));
}
