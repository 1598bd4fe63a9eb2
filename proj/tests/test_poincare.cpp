#include <doctest.h>

#include "kappa/hopf.hpp"
#include "kappa/linalg.hpp"
#include "kappa/minkowski.hpp"
#include "kappa/poincare.hpp"
#include "support.hpp"

using namespace kt;

namespace {

// [L^mu_nu, a^alpha] = -(i/k)((L^mu_0 - delta^mu_0) L^alpha_nu + (L^0_nu - delta^0_nu) g^{mu alpha})
Element lambda_a_oracle(const PoincareAlgebra& P, std::size_t mu, std::size_t nu, std::size_t alpha) {
  const Element I = P.one();
  const Element t1 = (P.lambda(mu, 0) - I * num(delta(mu, 0))) * P.lambda(alpha, nu);
  const Element t2 = (P.lambda(0, nu) - I * num(delta(0, nu))) * num(P.metric().g(mu, alpha));
  return P.a(alpha) * P.lambda(mu, nu) - (t1 + t2) * il();
}

}  // namespace

TEST_CASE("Lorentz entries past translations") {
  for (std::size_t n : {2, 3}) {
    const PoincareAlgebra P(Metric::standard(n));
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu)
        for (std::size_t al = 0; al < n; ++al)
          CHECK(P.lambda(mu, nu) * P.a(al) == lambda_a_oracle(P, mu, nu, al));
  }
  const PoincareAlgebra P(Metric::standard(2));
  CHECK((P.lambda(0, 1) * P.a(0)).to_string() == "-i*k^-1*L[0,0]*L[0,1] + a[0]*L[0,1]");
}

TEST_CASE("Hopf tables of P_kappa") {
  const PoincareAlgebra P(Metric::standard(2));
  const Element I = P.one();
  CHECK(coproduct(P.a(0)) == TensorElement::pure({P.lambda(0, 0), P.a(0)}) +
                                 TensorElement::pure({P.lambda(0, 1), P.a(1)}) + TensorElement::pure({P.a(0), I}));
  CHECK(counit(P.a(1)).is_zero());
  CHECK(counit(P.lambda(0, 0)).is_one());
  CHECK(counit(P.lambda(0, 1)).is_zero());
  // S(L^0_1) = g_{11} g^{00} L^1_0 for diag(+,-)
  CHECK(antipode(P.lambda(0, 1)) == -P.lambda(1, 0));
  CHECK(antipode(P.lambda(1, 1)) == P.lambda(1, 1));
  // m(S (x) id)Delta(a^mu) cancels before any relation is used
  for (std::size_t mu = 0; mu < 2; ++mu) CHECK(antipode_left(P.presentation(), Word{P.a_symbol(mu)}).is_zero());
}

TEST_CASE("translation relations are exactly compatible with the coproduct") {
  const PoincareAlgebra P(Metric::standard(2));
  // [a^0, a^1] - (i/k) a^1
  const Element rel = commutator(P.a(0), P.a(1)) - P.a(1) * il();
  CHECK(rel.is_zero());
  const TensorElement d0 = coproduct(P.a(0)), d1 = coproduct(P.a(1));
  CHECK((d0 * d1 - d1 * d0 - d1 * il()).is_zero());
  for (const auto& r : P.relations())
    if (r.label.rfind("[a", 0) == 0 && r.label.find(",a") != std::string::npos)
      CHECK(coproduct_raw(P.presentation(), r.raw).is_zero());
}

TEST_CASE("antipode law for L holds modulo orthogonality only") {
  const PoincareAlgebra P(Metric::standard(2));
  const OrthoIdeal J(P, 4);
  const auto gens = P.ortho_generators();
  for (std::size_t mu = 0; mu < 2; ++mu)
    for (std::size_t nu = 0; nu < 2; ++nu) {
      const Word w{P.lambda_symbol(mu, nu)};
      const Element defect = antipode_left(P.presentation(), w) - P.one() * num(delta(mu, nu));
      CHECK(ideal_membership(defect, gens, IdealSide::two_sided, 2));
      CHECK(J.contains(defect));
    }
  // L^0_0 L^0_0 - L^0_1 L^0_1 - 1 is an orthogonality relation; L^0_1 is not in the ideal
  CHECK_FALSE(J.contains(P.lambda(0, 1)));
  CHECK_FALSE(ideal_membership(P.lambda(0, 1), gens, IdealSide::two_sided, 3));
}

TEST_CASE("orthogonality reduction agrees with brute-force two-sided membership") {
  const PoincareAlgebra P(Metric::standard(2));
  const OrthoIdeal J(P, 4);
  const auto gens = P.ortho_generators();
  std::mt19937_64 rng(99);
  for (int k = 0; k < 12; ++k) {
    const Element u = random_element(P.presentation(), rng, 1, 2);
    const Element v = random_element(P.presentation(), rng, 1, 2);
    const Element g = gens[static_cast<std::size_t>(k) % gens.size()];
    const Element in = u * g * v;
    CHECK(J.contains(in));
    CHECK(ideal_membership(in, gens, IdealSide::two_sided, 4));
    const Element out = in + P.lambda(1, 0) * u;
    if (!(P.lambda(1, 0) * u).is_zero()) {
      CHECK(J.contains(out) == ideal_membership(out, gens, IdealSide::two_sided, 4));
    }
  }
}

TEST_CASE("Hopf suites") {
  for (std::size_t n : {2, 3, 4}) {
    const Report r = verify_hopf_minkowski(MinkowskiAlgebra(Metric::standard(n)), 3);
    CHECK_MESSAGE(r.ok(), "n = " << n);
  }
  const PoincareAlgebra P(Metric::standard(2));
  const Report r = verify_hopf_poincare(P, OrthoIdeal(P, 6), 3);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.status == Status::pass, c.name << ": " << c.detail);
}

TEST_CASE("M_kappa relations are star-consistent") {
  const MinkowskiAlgebra m(Metric::standard(3));
  for (const auto& r : m.relations()) {
    CHECK(Element::from_raw(m.presentation(), r.raw).is_zero());
    CHECK(star_raw(m.presentation(), r.raw).is_zero());
    CHECK(coproduct_raw(m.presentation(), r.raw).is_zero());
  }
}
