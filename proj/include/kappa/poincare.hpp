#pragma once

// The kappa-Poincare quantum group: translations a^mu and Lorentz entries
// L^mu_nu, its Hopf tables, and the orthogonality side ideal.

#include <cstddef>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "kappa/engine.hpp"
#include "kappa/linalg.hpp"
#include "kappa/minkowski.hpp"

namespace kappa {

class PoincareAlgebra {
 public:
  /// Throws AlgebraError for n < 2.
  explicit PoincareAlgebra(Metric metric);

  const Metric& metric() const { return metric_; }
  std::size_t dimension() const { return metric_.dimension(); }
  const PresentationPtr& presentation() const { return presentation_; }

  Symbol a_symbol(std::size_t mu) const;
  Symbol lambda_symbol(std::size_t mu, std::size_t nu) const;
  bool is_translation(Symbol s) const { return s < dimension(); }

  Element zero() const { return Element(presentation_); }
  Element one() const { return Element::scalar(presentation_, Scalar::one()); }
  Element a(std::size_t mu) const;
  /// L^mu_nu
  Element lambda(std::size_t mu, std::size_t nu) const;
  /// S(L^mu_nu) = L_nu^mu = g_{nu nu} g^{mu mu} L^nu_mu
  Element lambda_lowered(std::size_t nu, std::size_t mu) const;

  /// Row and column orthogonality: L^mu_a g^{ab} L^nu_b - g^{mu nu} and
  /// L^a_mu g_{ab} L^b_nu - g_{mu nu}, one generator per unordered (mu, nu).
  std::vector<Element> ortho_generators() const;

  /// Defining relations as raw words: a-a, L-a and L-L commutators.
  std::vector<Relation> relations() const;

 private:
  Metric metric_;
  PresentationPtr presentation_;
};

/// The two-sided ideal generated by the orthogonality relations, handled
/// through its commutative L-part: a normal word a...a L...L is reduced by
/// reducing its L-monomial against the degree-truncated span J of
/// {L-monomial * o}. Sound for every input; complete for L-degree
/// <= max_degree whenever [a^mu, J] lies in J (checked by the test suite).
class OrthoIdeal {
 public:
  OrthoIdeal(const PoincareAlgebra& alg, std::size_t max_degree);

  std::size_t max_degree() const { return max_degree_; }
  const RowSpace& lambda_span() const { return span_; }
  const std::vector<Element>& generators() const { return generators_; }

  /// Canonical representative modulo the ideal.
  Element reduce(const Element& p) const;
  bool contains(const Element& p) const { return reduce(p).is_zero(); }
  /// Reduces factor k (a Poincare factor) of a tensor.
  TensorElement reduce_factor(const TensorElement& t, std::size_t k) const;
  /// Reduces every factor that belongs to the Poincare presentation.
  TensorElement reduce_all(const TensorElement& t) const;
  bool equal_mod(const TensorElement& a, const TensorElement& b) const { return reduce_all(a - b).is_zero(); }
  bool equal_mod(const Element& a, const Element& b) const { return contains(a - b); }

 private:
  const Terms& reduce_word(const Word& w) const;

  PresentationPtr presentation_;
  std::size_t n_;
  std::size_t max_degree_;
  std::vector<Element> generators_;
  RowSpace span_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, Terms, WordHash> cache_;
};

}  // namespace kappa
