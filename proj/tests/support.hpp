#pragma once

#include <initializer_list>
#include <random>

#include "kappa/engine.hpp"
#include "kappa/scalar.hpp"

namespace kt {

using namespace kappa;

inline Word word(std::initializer_list<int> s) {
  Word w;
  for (int x : s) w.push_back(static_cast<Symbol>(x));
  return w;
}

// i*lambda, i.e. i/kappa
inline Scalar il(int k = 1) { return Scalar::lambda(k, GaussianRational::i()); }
inline Scalar lam(int k = 1) { return Scalar::lambda(k); }
inline Scalar num(long p, long q = 1) { return Scalar::rational(p, q); }

inline mpq_class q(long p, long d) {
  mpq_class r(p, d);
  r.canonicalize();
  return r;
}

inline Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 3), pw(-3, 3), c(-5, 5), den(1, 4);
  Scalar s;
  for (int k = len(rng); k > 0; --k)
    s += Scalar(GaussianRational(q(c(rng), den(rng)), q(c(rng), den(rng))), pw(rng));
  return s;
}

}  // namespace kt
