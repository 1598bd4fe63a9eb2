#pragma once

// Text expressions over M_kappa, P_kappa and one-forms.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := x<d> | a[i] | L[i,j] | t<d> | tau | phi | i | p/q | k^-m | '(' expr ')'

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "kappa/calculus.hpp"
#include "kappa/engine.hpp"
#include "kappa/minkowski.hpp"
#include "kappa/poincare.hpp"

namespace kappa {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position_(pos) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Algebras that expressions are evaluated in, for one metric.
class ExpressionContext {
 public:
  explicit ExpressionContext(const Metric& metric);

  const MinkowskiAlgebra& minkowski() const { return calculus_.algebra(); }
  const PoincareAlgebra& poincare() const { return poincare_; }
  const Calculus& calculus() const { return calculus_; }

 private:
  PoincareAlgebra poincare_;
  Calculus calculus_;
};

struct Value {
  enum class Kind { scalar, minkowski, poincare, form };
  Kind kind = Kind::scalar;
  Scalar scalar;
  std::optional<Element> element;
  std::optional<OneForm> form;
};

/// Parses and normalizes. Throws ParseError (syntax, unknown symbol, index
/// out of range) or AlgebraError (mixing algebras, products of forms).
Value parse_expression(const std::string& text, const ExpressionContext& ctx);

/// Scalars are promoted to M_kappa; throws AlgebraError for other kinds.
Element as_minkowski(const Value& v, const ExpressionContext& ctx);
/// Zero scalars give the zero form; throws AlgebraError for other kinds.
OneForm as_form(const Value& v, const ExpressionContext& ctx);

std::string to_string(const Value& v, const ExpressionContext& ctx);

}  // namespace kappa
