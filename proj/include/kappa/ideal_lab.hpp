#pragma once

// Degree-truncated experiments on right ideals R in ker(eps) of M_kappa:
// spans, covariant closure under the lifted coaction, quotient dimensions of
// ker(eps)/R and the stability properties of the traceless ideal.

#include <cstddef>
#include <string>
#include <vector>

#include "kappa/coaction.hpp"
#include "kappa/linalg.hpp"
#include "kappa/minkowski.hpp"
#include "kappa/poincare.hpp"
#include "kappa/report.hpp"

namespace kappa {

/// Normal words of exact degree d.
std::vector<Word> graded_basis(const MinkowskiAlgebra& alg, std::size_t degree);

/// x^{mu nu} - (1/n) g^{mu nu} phi for all index pairs (n^2 elements, row-major).
std::vector<Element> traceless_generators(const MinkowskiAlgebra& alg);
/// x^{mu nu} for all index pairs.
std::vector<Element> x_munu_generators(const MinkowskiAlgebra& alg);

/// Span of g*m over normal words m with deg g + deg m <= max_degree.
RowSpace right_ideal_span(const std::vector<Element>& gens, std::size_t max_degree);

/// Dimension of ker(eps) restricted to degree <= d: all nonempty normal words.
std::size_t kernel_dimension(const MinkowskiAlgebra& alg, std::size_t max_degree);

struct QuotientReport {
  std::size_t max_degree = 0;
  std::size_t kernel_dim = 0;
  std::size_t ideal_dim = 0;
  std::size_t quotient_dim = 0;
  /// Normal words outside the pivots of R; their classes form a basis of the quotient.
  std::vector<Word> representatives;
};

QuotientReport quotient_dimension(const MinkowskiAlgebra& alg, const std::vector<Element>& gens, std::size_t max_degree);

/// True iff the classes of `elements` span ker(eps)_{<=d} / R_{<=d}.
bool spans_quotient(const MinkowskiAlgebra& alg, const RowSpace& ideal, const std::vector<Element>& elements,
                    std::size_t max_degree);

struct ClosureResult {
  std::vector<Element> generators;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Adds the M_kappa arguments v of rho~_L(omega(r)) = sum p (x) omega(v_p), for
/// every echelon row r of the current right ideal, until nothing new appears.
/// The Poincare factor is taken modulo the orthogonality ideal.
ClosureResult covariant_closure(const Coaction& c, const OrthoIdeal& ortho, const std::vector<Element>& gens,
                                std::size_t max_degree, std::size_t max_iterations = 8);

/// The covariant arguments v_p of a single element (each in ker eps).
std::vector<Element> coaction_arguments(const Coaction& c, const OrthoIdeal& ortho, const Element& r);

/// For every traceless generator q: star(antipode(q)) lies in the truncated right ideal.
bool star_antipode_in_ideal(const MinkowskiAlgebra& alg, std::size_t max_degree);

/// Quotient dimension n+1 with representatives x^mu, phi; covariance of the
/// traceless ideal; triviality of the calculi from x^0 and from all x^{mu nu};
/// star(S(R)) in R; no degree-one element in R.
Report verify_classification(const Coaction& c, const OrthoIdeal& ortho, std::size_t max_degree);

}  // namespace kappa
