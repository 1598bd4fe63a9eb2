#pragma once

// Exact coefficients: Laurent polynomials in lambda = 1/kappa with
// Gaussian-rational coefficients.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kappa {

/// re + im*i with both parts in lowest terms.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// Throws std::domain_error on zero.
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Finite sum  sum_k c_k lambda^k  kept sorted by exponent with no zero
/// coefficients, so equality is structural.
class Scalar {
 public:
  using Term = std::pair<int, GaussianRational>;

  Scalar() = default;
  Scalar(long c) : Scalar(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(GaussianRational c, int lambda_power = 0);  // NOLINT(google-explicit-constructor)

  static Scalar zero() { return {}; }
  static Scalar one() { return {1}; }
  static Scalar i() { return {GaussianRational::i()}; }
  /// c * lambda^k
  static Scalar lambda(int k = 1, GaussianRational c = 1) { return {std::move(c), k}; }
  static Scalar rational(long num, long den) { return {GaussianRational(mpq_class(num, den))}; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one(); }
  /// Units of the Laurent ring are the single-term elements.
  bool is_unit() const { return terms_.size() == 1; }
  Scalar unit_inverse() const;

  const std::vector<Term>& terms() const { return terms_; }
  int min_power() const;
  int max_power() const;

  Scalar conj() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  /// Exact quotient; throws std::domain_error when b does not divide a.
  friend Scalar exact_div(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  /// Renders with "i", "k^-m" for lambda^m and "p/q" rationals, exponents ascending.
  std::string to_string() const;
  /// True when to_string() needs parentheses as a multiplicative factor.
  bool needs_parens() const;

 private:
  void add_term(int power, const GaussianRational& c);
  std::vector<Term> terms_;
};

}  // namespace kappa
