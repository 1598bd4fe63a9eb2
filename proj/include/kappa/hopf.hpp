#pragma once

// Hopf-axiom evaluation on single words and the verification suites for
// M_kappa and P_kappa.

#include <cstddef>

#include "kappa/engine.hpp"
#include "kappa/minkowski.hpp"
#include "kappa/poincare.hpp"
#include "kappa/report.hpp"

namespace kappa {

/// (Delta (x) id) Delta(w) and (id (x) Delta) Delta(w)
TensorElement coassoc_left(const PresentationPtr& p, const Word& w);
TensorElement coassoc_right(const PresentationPtr& p, const Word& w);
/// (eps (x) id) Delta(w) and (id (x) eps) Delta(w)
Element counit_left(const PresentationPtr& p, const Word& w);
Element counit_right(const PresentationPtr& p, const Word& w);
/// m (S (x) id) Delta(w) and m (id (x) S) Delta(w)
Element antipode_left(const PresentationPtr& p, const Word& w);
Element antipode_right(const PresentationPtr& p, const Word& w);

/// Antilinear star applied to every factor.
TensorElement star_tensor(const TensorElement& t);

/// Images of raw (unnormalized) words under the table-extended maps.
TensorElement coproduct_raw(const PresentationPtr& p, const RawTerms& raw);
Scalar counit_raw(const Presentation& p, const RawTerms& raw);
Element star_raw(const PresentationPtr& p, const RawTerms& raw);

/// Coassociativity, counit and antipode laws, star compatibility and the
/// relations' images, all exact, on normal monomials of degree <= max_degree.
Report verify_hopf_minkowski(const MinkowskiAlgebra& alg, std::size_t max_degree);

/// Same axioms for P_kappa. Coproduct-side identities are compared modulo the
/// orthogonality ideal (exactness is stated in each detail); the antipode law
/// is checked on monomials whose image fits the ideal truncation.
Report verify_hopf_poincare(const PoincareAlgebra& alg, const OrthoIdeal& ortho, std::size_t max_degree);

}  // namespace kappa
