#pragma once

// Left coaction of P_kappa on M_kappa, its lift to the universal bimodule,
// the map omega on ker(eps), the projection Pi and the self-coactions of M_kappa.

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "kappa/engine.hpp"
#include "kappa/minkowski.hpp"
#include "kappa/poincare.hpp"
#include "kappa/report.hpp"

namespace kappa {

/// Element sum a_k (x) b_k of A (x) A with sum a_k b_k = 0.
class UniversalBimoduleElement {
 public:
  /// Throws AlgebraError unless value is a 2-factor tensor over one algebra
  /// whose multiplication image vanishes.
  explicit UniversalBimoduleElement(TensorElement value);

  const TensorElement& value() const { return value_; }
  const PresentationPtr& algebra() const { return value_.factors()[0]; }
  bool is_zero() const { return value_.is_zero(); }

  UniversalBimoduleElement& operator+=(const UniversalBimoduleElement& o);
  UniversalBimoduleElement& operator-=(const UniversalBimoduleElement& o);
  friend UniversalBimoduleElement operator+(UniversalBimoduleElement a, const UniversalBimoduleElement& b) {
    return a += b;
  }
  friend UniversalBimoduleElement operator-(UniversalBimoduleElement a, const UniversalBimoduleElement& b) {
    return a -= b;
  }
  friend UniversalBimoduleElement operator*(UniversalBimoduleElement a, const Scalar& c);
  /// c (sum a_k (x) b_k) = sum c a_k (x) b_k
  friend UniversalBimoduleElement operator*(const Element& c, const UniversalBimoduleElement& q);
  /// (sum a_k (x) b_k) c = sum a_k (x) b_k c
  friend UniversalBimoduleElement operator*(const UniversalBimoduleElement& q, const Element& c);
  friend bool operator==(const UniversalBimoduleElement& a, const UniversalBimoduleElement& b) {
    return a.value_ == b.value_;
  }

  std::string to_string() const { return value_.to_string(); }

 private:
  TensorElement value_;
};

/// D a = I (x) a - a (x) I
UniversalBimoduleElement universal_d(const Element& a);
/// omega(v) = sum S(v_(1)) (x) v_(2); throws AlgebraError when eps(v) != 0.
UniversalBimoduleElement omega_univ(const Element& v);

/// The right self-coaction of a Hopf algebra is its coproduct.
inline TensorElement rho_R_self(const Element& a) { return coproduct(a); }
/// Lifts of the left and right self-coactions (Delta) to A (x) A:
/// sum x_1 y_1 (x) x_2 (x) y_2  and  sum x_1 (x) y_1 (x) x_2 y_2.
TensorElement lift_rho_L_self(const TensorElement& q);
TensorElement lift_rho_R_self(const TensorElement& q);

/// Inserts a unit factor of presentation p at position pos.
TensorElement insert_unit_factor(const TensorElement& t, std::size_t pos, const PresentationPtr& p);

class Coaction {
 public:
  Coaction(MinkowskiAlgebra m, PoincareAlgebra p);

  const MinkowskiAlgebra& minkowski() const { return m_; }
  const PoincareAlgebra& poincare() const { return p_; }

  /// rho_L(x^mu) = L^mu_nu (x) x^nu + a^mu (x) I, extended multiplicatively.
  TensorElement rho_L(const Element& a) const;
  const TensorElement& rho_L_word(const Word& w) const;
  /// Image of raw (unnormalized) words.
  TensorElement rho_L_raw(const RawTerms& raw) const;

  /// sum a^k b^l (x) x^k (x) y^l for any tensor sum x_i (x) y_i.
  TensorElement lift_rho_L(const TensorElement& q) const;
  TensorElement lift_rho_L(const UniversalBimoduleElement& q) const { return lift_rho_L(q.value()); }

  /// Pi(a^mu) = x^mu, Pi(L^mu_nu) = delta^mu_nu I
  Element pi(const Element& p) const;
  Element pi_raw(const RawTerms& raw) const;

 private:
  MinkowskiAlgebra m_;
  PoincareAlgebra p_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, TensorElement, WordHash> cache_;
};

/// Coaction axioms, lift properties (i_L)-(iii_L), D-compatibility, the
/// x_i D y_i formula on random samples, Pi intertwining, and the mirror
/// properties of the self-coaction pair of M_kappa.
Report verify_coaction_suite(const Coaction& c, const OrthoIdeal& ortho, std::size_t max_degree, std::uint64_t seed,
                             std::size_t samples = 50);

/// rho~_L(omega(x^{mu nu})) = L^mu_a L^nu_b (x) omega(x^{ab}) and
/// rho~_L(omega(phi)) = I (x) omega(phi), modulo the orthogonality ideal.
Report verify_x_munu_covariance(const Coaction& c, const OrthoIdeal& ortho);

}  // namespace kappa
