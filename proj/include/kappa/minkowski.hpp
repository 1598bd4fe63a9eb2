#pragma once

// The n-dimensional kappa-Minkowski Hopf *-algebra.

#include <string>
#include <utility>
#include <vector>

#include "kappa/engine.hpp"

namespace kappa {

/// Diagonal metric g = diag(signature); g^{mu nu} = g_{mu nu}.
class Metric {
 public:
  explicit Metric(std::vector<int> signature);
  /// diag(+1, -1, ..., -1)
  static Metric standard(std::size_t n);
  /// Parses "+---" style strings. Throws std::invalid_argument.
  static Metric parse(const std::string& text);

  std::size_t dimension() const { return signature_.size(); }
  int g(std::size_t mu, std::size_t nu) const { return mu == nu ? signature_.at(mu) : 0; }
  int diag(std::size_t mu) const { return signature_.at(mu); }
  std::string to_string() const;

  friend bool operator==(const Metric&, const Metric&) = default;

 private:
  std::vector<int> signature_;
};

inline int delta(std::size_t a, std::size_t b) { return a == b ? 1 : 0; }

/// A raw relation (lhs - rhs, unnormalized) with a printable label.
struct Relation {
  std::string label;
  RawTerms raw;
};

class MinkowskiAlgebra {
 public:
  /// Throws AlgebraError for n < 2.
  explicit MinkowskiAlgebra(Metric metric);

  const Metric& metric() const { return metric_; }
  std::size_t dimension() const { return metric_.dimension(); }
  const PresentationPtr& presentation() const { return presentation_; }

  Element zero() const { return Element(presentation_); }
  Element one() const { return Element::scalar(presentation_, Scalar::one()); }
  Element scalar(const Scalar& c) const { return Element::scalar(presentation_, c); }
  /// x^mu
  Element x(std::size_t mu) const;
  /// x_mu = g_{mu nu} x^nu
  Element x_lower(std::size_t mu) const;
  /// g_{mu nu} x^mu x^nu
  Element x_squared() const;
  /// x^2 + (i/kappa)(n-1) x^0
  Element phi() const;
  /// x^mu x^nu + (i/kappa)(g^{mu nu} x^0 - g^{0 mu} x^nu)
  Element x_munu(std::size_t mu, std::size_t nu) const;

  /// [x^mu, x^nu] - (i/kappa)(delta_0^mu x^nu - delta_0^nu x^mu) as raw words, mu < nu.
  std::vector<Relation> relations() const;

 private:
  Metric metric_;
  PresentationPtr presentation_;
};

}  // namespace kappa
