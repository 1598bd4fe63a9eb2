#pragma once

// Finitely presented *-algebras with a PBW-type normal ordering: words,
// canonical elements, tensor products and the homomorphic extension of the
// Hopf and star tables.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <algorithm>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kappa/scalar.hpp"

namespace kappa {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Symbol = std::uint8_t;
using Word = std::basic_string<Symbol>;

/// Total degree first, then lexicographic on generator indices.
struct GradedLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(w.data()), w.size()));
  }
};

struct TupleLess {
  bool operator()(const std::vector<Word>& a, const std::vector<Word>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), GradedLess{});
  }
};

using Terms = std::map<Word, Scalar, GradedLess>;
using TensorTerms = std::map<std::vector<Word>, Scalar, TupleLess>;
/// Words in any order, possibly repeated; input to normalization.
using RawTerms = std::vector<std::pair<Word, Scalar>>;

void add_term(Terms& terms, const Word& w, const Scalar& c);
void add_term(TensorTerms& terms, const std::vector<Word>& w, const Scalar& c);

inline bool is_normal(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

/// Everything needed to build a Presentation. Swap rules are keyed by the
/// out-of-order pair (later, earlier): later*earlier -> earlier*later + correction.
/// Pairs without a rule commute.
struct PresentationData {
  std::string name;
  std::vector<std::string> generators;
  /// Generators counted ahead of plain degree by the termination order.
  std::vector<bool> heavy;
  std::map<std::pair<Symbol, Symbol>, Terms> swap_rules;
  std::vector<Scalar> counit;
  std::vector<Terms> antipode;
  std::vector<Terms> star;
  std::vector<TensorTerms> coproduct;
};

class Presentation {
 public:
  explicit Presentation(PresentationData data);

  const std::string& name() const { return data_.name; }
  std::size_t size() const { return data_.generators.size(); }
  const std::string& generator_name(Symbol s) const { return data_.generators.at(s); }
  /// Throws AlgebraError for unknown names.
  Symbol symbol(const std::string& name) const;
  bool has_hopf_tables() const { return !data_.coproduct.empty(); }

  const Terms* swap_rule(Symbol later, Symbol earlier) const;
  const std::map<std::pair<Symbol, Symbol>, Terms>& swap_rules() const { return data_.swap_rules; }
  const Scalar& counit_of(Symbol s) const { return data_.counit.at(s); }
  const Terms& antipode_of(Symbol s) const { return data_.antipode.at(s); }
  const Terms& star_of(Symbol s) const { return data_.star.at(s); }
  const TensorTerms& coproduct_of(Symbol s) const { return data_.coproduct.at(s); }

  /// Normal form of w*g for a normal word w (memoized).
  const Terms& mul_word_gen(const Word& w, Symbol g) const;
  /// Normal form of a*b for normal words a, b.
  Terms mul_words(const Word& a, const Word& b) const;
  /// Normal form of an arbitrary word.
  Terms normalize_word(const Word& w) const;

  /// (degree, heavy degree, inversion count): every swap-rule correction is
  /// strictly smaller than the word it replaces.
  std::tuple<std::size_t, std::size_t, std::size_t> order_key(const Word& w) const;

  std::string word_to_string(const Word& w) const;

 private:
  PresentationData data_;
  std::unordered_map<std::string, Symbol> by_name_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Word, Terms, WordHash> cache_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

class TensorElement;

/// Canonical (fully normal-ordered) algebra element.
class Element {
 public:
  explicit Element(PresentationPtr alg) : alg_(std::move(alg)) {}
  Element(PresentationPtr alg, Terms terms);

  static Element scalar(PresentationPtr alg, const Scalar& c);
  static Element generator(PresentationPtr alg, Symbol s, const Scalar& c = Scalar::one());
  /// Normalizes arbitrary words; throws AlgebraError on unknown symbols.
  static Element from_raw(PresentationPtr alg, const RawTerms& raw);

  const PresentationPtr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Length of the longest word; 0 for scalars and zero.
  std::size_t degree() const;
  Scalar coefficient(const Word& w) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);
  Element operator-() const { return *this * Scalar(-1); }

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void check_same(const Element& o) const;
  PresentationPtr alg_;
  Terms terms_;
};

Element commutator(const Element& a, const Element& b);

Scalar counit(const Element& a);
Element antipode(const Element& a);
Element star(const Element& a);
TensorElement coproduct(const Element& a);

Scalar counit_word(const Presentation& p, const Word& w);
Terms antipode_word(const Presentation& p, const Word& w);
Terms star_word(const Presentation& p, const Word& w);

/// Homomorphic image of raw (unnormalized) words: each generator is replaced
/// by its image and the images are multiplied in the given order.
template <typename T>
T extend_multiplicative(const RawTerms& raw, const std::function<T(Symbol)>& image, const T& one,
                        const T& zero) {
  T total = zero;
  for (const auto& [w, c] : raw) {
    T prod = one;
    for (Symbol s : w) prod = prod * image(s);
    total += prod * c;
  }
  return total;
}

/// Sum over tuples of words, one factor per listed presentation. Factors
/// commute with each other; products are componentwise.
class TensorElement {
 public:
  explicit TensorElement(std::vector<PresentationPtr> factors) : factors_(std::move(factors)) {}
  TensorElement(std::vector<PresentationPtr> factors, TensorTerms terms);

  static TensorElement unit(std::vector<PresentationPtr> factors);
  static TensorElement pure(const std::vector<Element>& parts);

  const std::vector<PresentationPtr>& factors() const { return factors_; }
  std::size_t arity() const { return factors_.size(); }
  const TensorTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Scalar& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const Scalar& c) { return a *= c; }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);

  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void check_same(const TensorElement& o) const;
  std::vector<PresentationPtr> factors_;
  TensorTerms terms_;
};

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);

/// Linear map applied to factor k.
TensorElement map_factor(const TensorElement& t, std::size_t k,
                         const std::function<Terms(const Word&)>& fn);
/// Replaces factor k by the factors of fn(word) (a tensor over `replacement`).
TensorElement expand_factor(const TensorElement& t, std::size_t k,
                            const std::vector<PresentationPtr>& replacement,
                            const std::function<TensorElement(const Word&)>& fn);
/// Drops factor k through a linear functional.
TensorElement collapse_factor(const TensorElement& t, std::size_t k,
                              const std::function<Scalar(const Word&)>& fn);
/// Multiplies factors k and k+1 (same presentation) into one.
TensorElement contract(const TensorElement& t, std::size_t k);
/// Single-factor tensor to Element.
Element to_element(const TensorElement& t);
/// Groups by all factors except k: other-factor words -> element of factor k.
std::map<std::vector<Word>, Element, TupleLess> split_factor(const TensorElement& t, std::size_t k);

TensorElement coproduct_word(const PresentationPtr& p, const Word& w);

/// Random element with up to max_terms terms of degree <= max_degree and
/// small coefficients mixing i and lambda (for property checks).
Element random_element(const PresentationPtr& p, std::mt19937_64& rng, std::size_t max_degree,
                       std::size_t max_terms);

}  // namespace kappa
