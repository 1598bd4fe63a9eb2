#include <doctest.h>

#include "support.hpp"

using namespace kt;

TEST_CASE("scalar addition") {
  CHECK((il() + (-il())).is_zero());
  CHECK((num(1, 2) + num(1, 2)).is_one());
  CHECK(il() + il() == Scalar::lambda(1, GaussianRational(0, 2)));
  CHECK((il() + il()).to_string() == "2*i*k^-1");
}

TEST_CASE("scalar multiplication") {
  CHECK(il() * il() == -lam(2));
  CHECK(num(3) * lam(2) * Scalar::one() == num(3) * lam(2));
  CHECK(il() * (-Scalar::i()) == lam());
  CHECK(lam(2) * lam(-2) == Scalar::one());
}

TEST_CASE("scalar conjugation") {
  CHECK(il().conj() == -il());
  CHECK(num(3, 2).conj() == num(3, 2));
  const Scalar s = -il(2) + num(2);
  CHECK(s.conj() == il(2) + num(2));
}

TEST_CASE("unit inverse and exact division") {
  const Scalar u = Scalar::lambda(3, GaussianRational(q(2, 3), q(-1, 5)));
  CHECK((u * u.unit_inverse()).is_one());
  const Scalar a = num(2) + il();
  CHECK(exact_div(a * u, u) == a);
  CHECK(a.min_power() == 0);
  CHECK(a.max_power() == 1);
}

TEST_CASE("printing") {
  CHECK(Scalar::zero().to_string() == "0");
  CHECK(Scalar::lambda(-1).to_string() == "k");
  CHECK((num(3, 2) + lam(-1)).to_string() == "k + 3/2");
  CHECK(Scalar(GaussianRational(2, -1), 2).conj().to_string() == "(2 + i)*k^-2");
}

TEST_CASE("ring axioms on random scalars") {
  std::mt19937_64 rng(20240501);
  for (int k = 0; k < 1000; ++k) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    REQUIRE(a + b == b + a);
    REQUIRE((a - a).is_zero());
    REQUIRE((a * b).conj() == a.conj() * b.conj());
  }
}
