#pragma once

// The (n+1)-dimensional left-covariant first-order calculus over M_kappa:
// one-forms in the basis {t^mu, tau} with left coefficients, the commutation
// rules, d, star, the flip sigma and the exterior square.

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kappa/coaction.hpp"
#include "kappa/engine.hpp"
#include "kappa/minkowski.hpp"
#include "kappa/poincare.hpp"
#include "kappa/report.hpp"

namespace kappa {

/// sum_b f_b * b with b = t^0..t^{n-1} (index mu) and tau (index n).
struct OneForm {
  std::vector<Element> coeff;

  bool is_zero() const;
  OneForm& operator+=(const OneForm& o);
  OneForm& operator-=(const OneForm& o);
  OneForm& operator*=(const Scalar& c);
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
  friend OneForm operator*(OneForm a, const Scalar& c) { return a *= c; }
  /// a * (sum f_b b) = sum (a f_b) b
  friend OneForm operator*(const Element& a, const OneForm& f);
  friend bool operator==(const OneForm& a, const OneForm& b) { return a.coeff == b.coeff; }
};

using BasisPair = std::pair<std::size_t, std::size_t>;

/// sum t_{bc} b (x) c over all basis pairs, left coefficients.
struct FormTensor {
  std::map<BasisPair, Element> coeff;

  bool is_zero() const { return coeff.empty(); }
  void add(const BasisPair& key, const Element& e);
  FormTensor& operator+=(const FormTensor& o);
  FormTensor& operator-=(const FormTensor& o);
  friend FormTensor operator+(FormTensor a, const FormTensor& b) { return a += b; }
  friend FormTensor operator-(FormTensor a, const FormTensor& b) { return a -= b; }
  friend bool operator==(const FormTensor& a, const FormTensor& b) { return a.coeff == b.coeff; }
};

/// sum w_{bc} b ^ c over ordered pairs: tau first, then t^0 < t^1 < ...
struct TwoForm {
  std::map<BasisPair, Element> coeff;

  bool is_zero() const { return coeff.empty(); }
  void add(const BasisPair& key, const Element& e);
  TwoForm& operator+=(const TwoForm& o);
  TwoForm& operator-=(const TwoForm& o);
  TwoForm& operator*=(const Scalar& c);
  friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
  friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
  friend TwoForm operator*(TwoForm a, const Scalar& c) { return a *= c; }
  friend bool operator==(const TwoForm& a, const TwoForm& b) { return a.coeff == b.coeff; }
};

/// X (x) Omega^1 (or Omega^1 (x) X): one 2-factor tensor per basis form.
using CoactedForm = std::vector<TensorElement>;

class Calculus {
 public:
  explicit Calculus(MinkowskiAlgebra m);

  const MinkowskiAlgebra& algebra() const { return m_; }
  const PresentationPtr& presentation() const { return m_.presentation(); }
  std::size_t basis_size() const { return n_ + 1; }
  std::size_t tau_index() const { return n_; }
  /// "t0".."t{n-1}", "tau"
  std::string basis_name(std::size_t b) const;
  /// Throws AlgebraError for unknown names.
  std::size_t basis_index(const std::string& name) const;

  OneForm zero() const;
  OneForm basis(std::size_t b, const Element& coeff) const;
  OneForm basis(std::size_t b) const;

  /// [b, x^nu]:  [t^mu, x^nu] = (i/k) g^{0 mu} t^nu - (i/k) g^{mu nu} t^0 + (1/n) g^{mu nu} tau,
  ///             [tau, x^mu] = -(n/k^2) t^mu
  const OneForm& commutation_rule(std::size_t b, std::size_t nu) const;

  OneForm right_mul(const OneForm& f, const Element& a) const;
  /// Right multiplication by an unnormalized word, generator by generator.
  OneForm right_mul_word(const OneForm& f, const Word& w) const;

  OneForm d0(const Element& a) const;
  /// Leibniz expansion over raw words.
  OneForm d0_raw(const RawTerms& raw) const;
  /// (t^mu)* = t^mu, tau* = -tau, (f b)* = b* f*
  OneForm star(const OneForm& f) const;
  /// sum a_k d(b_k)
  OneForm project(const UniversalBimoduleElement& q) const;
  /// d(phi) - 2 x_mu t^mu, which should be tau.
  OneForm tau_from_phi() const;

  /// f (x)_M g in left-canonical form.
  FormTensor tensor(const OneForm& f, const OneForm& g) const;
  FormTensor sigma(const FormTensor& t) const;
  FormTensor right_mul(const FormTensor& t, const Element& a) const;
  /// Class of t modulo ker(I - sigma).
  TwoForm project(const FormTensor& t) const;
  TwoForm wedge(const OneForm& f, const OneForm& g) const;
  TwoForm right_mul(const TwoForm& w, const Element& a) const;
  /// d(f_b b) = d(f_b) ^ b + f_b d(b), with d(t^mu) = 0 and d(tau) from tau = d(phi) - 2 x_mu d(x^mu).
  TwoForm d1(const OneForm& f) const;
  const TwoForm& d1_tau() const { return d1_tau_; }

  /// Universal representatives: omega(x^mu) for t^mu, omega(phi) for tau.
  UniversalBimoduleElement representative(std::size_t b) const;

  std::string to_string(const OneForm& f) const;
  std::string to_string(const TwoForm& w) const;
  std::string to_string(const FormTensor& t) const;

 private:
  const OneForm& basis_times_word(std::size_t b, const Word& w) const;
  const OneForm& d0_word(const Word& w) const;
  bool canonical(const BasisPair& p) const;

  MinkowskiAlgebra m_;
  std::size_t n_;
  std::vector<std::vector<OneForm>> rules_;
  TwoForm d1_tau_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, Word>, OneForm> right_cache_;
  mutable std::unordered_map<Word, OneForm, WordHash> d_cache_;
};

/// rho~_L(f_b b) = rho_L(f_b) rho~_L(b) with rho~_L(t^mu) = L^mu_nu (x) t^nu, rho~_L(tau) = I (x) tau.
/// Entry b is the {P, M} tensor in front of basis form b.
CoactedForm coact_form(const Calculus& cal, const Coaction& c, const OneForm& f);
/// The same, computed as (id (x) pi) of the lifted coaction on the universal representative.
CoactedForm coact_form_universal(const Calculus& cal, const Coaction& c, const OneForm& f);

/// Projection of the last two factors of an X (x) M (x) M tensor into X (x) Omega^1.
CoactedForm project_last(const Calculus& cal, const TensorElement& t);
/// Projection of the first two factors of an M (x) M (x) X tensor into Omega^1 (x) X.
CoactedForm project_first(const Calculus& cal, const TensorElement& t);

/// Bimodule consistency, d on the relations, d o d = 0, star compatibility,
/// sigma-covariance of the left coaction on basis 2-tensors, invariance of the
/// basis under the self-coactions, the coaction table against the universal
/// construction, and property runs on random forms.
Report verify_calculus_suite(const Calculus& cal, const Coaction& c, const OrthoIdeal& ortho, std::size_t max_degree,
                             std::uint64_t seed, std::size_t samples = 500);

}  // namespace kappa
