#include "kappa/expr.hpp"

#include <cctype>

namespace kappa {

ExpressionContext::ExpressionContext(const Metric& metric) : poincare_(metric), calculus_(MinkowskiAlgebra(metric)) {}

namespace {

using Kind = Value::Kind;

Value make_scalar(Scalar s) {
  Value v;
  v.scalar = std::move(s);
  return v;
}

Value make_element(Kind k, Element e) {
  Value v;
  v.kind = k;
  v.element = std::move(e);
  return v;
}

Value make_form(OneForm f) {
  Value v;
  v.kind = Kind::form;
  v.form = std::move(f);
  return v;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::scalar:
      return "scalar";
    case Kind::minkowski:
      return "M_kappa element";
    case Kind::poincare:
      return "P_kappa element";
    case Kind::form:
      return "one-form";
  }
  return "?";
}

class Parser {
 public:
  Parser(const std::string& text, const ExpressionContext& ctx) : s_(text), ctx_(ctx) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_word(const std::string& w) const { return s_.compare(pos_, w.size(), w) == 0; }

  std::size_t number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) fail("number too large");
    return std::stoul(s_.substr(start, pos_ - start));
  }

  std::size_t index(std::size_t n) {
    const std::size_t at = pos_;
    const std::size_t k = number();
    if (k >= n) throw ParseError("index " + std::to_string(k) + " out of range for n = " + std::to_string(n), at);
    return k;
  }

  Value expr() {
    skip();
    bool negate = eat('-');
    Value acc = term();
    if (negate) acc = scale(acc, Scalar(-1));
    for (;;) {
      if (eat('+')) {
        acc = add(acc, term(), false);
      } else if (eat('-')) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = factor();
    while (eat('*')) acc = mul(acc, factor());
    return acc;
  }

  Value factor() {
    skip();
    if (peek_word("k")) {
      ++pos_;
      int e = -1;
      if (eat('^')) {
        const bool neg = eat('-');
        const auto m = static_cast<int>(number());
        e = neg ? m : -m;
      }
      return make_scalar(Scalar::lambda(e));
    }
    Value base = atom();
    if (eat('^')) {
      const std::size_t e = number();
      Value out = make_scalar(Scalar::one());
      for (std::size_t k = 0; k < e; ++k) out = mul(out, base);
      return out;
    }
    return base;
  }

  Value atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const auto& m = ctx_.minkowski();
    const auto& p = ctx_.poincare();
    const std::size_t n = m.dimension();
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto num = static_cast<long>(number());
      if (eat('/')) {
        const std::size_t at = pos_;
        const auto den = static_cast<long>(number());
        if (den == 0) throw ParseError("zero denominator", at);
        return make_scalar(Scalar::rational(num, den));
      }
      return make_scalar(Scalar(num));
    }
    if (peek_word("tau")) {
      pos_ += 3;
      return make_form(ctx_.calculus().basis(n));
    }
    if (peek_word("phi")) {
      pos_ += 3;
      return make_element(Kind::minkowski, m.phi());
    }
    if (c == 'i') {
      ++pos_;
      return make_scalar(Scalar::i());
    }
    if (c == 'x') {
      ++pos_;
      return make_element(Kind::minkowski, m.x(index(n)));
    }
    if (c == 't') {
      ++pos_;
      return make_form(ctx_.calculus().basis(index(n)));
    }
    if (c == 'a') {
      ++pos_;
      expect('[');
      const std::size_t mu = index(n);
      expect(']');
      return make_element(Kind::poincare, p.a(mu));
    }
    if (c == 'L') {
      ++pos_;
      expect('[');
      const std::size_t mu = index(n);
      expect(',');
      const std::size_t nu = index(n);
      expect(']');
      return make_element(Kind::poincare, p.lambda(mu, nu));
    }
    fail("unknown symbol '" + std::string(1, c) + "'");
  }

  Value scale(const Value& v, const Scalar& c) {
    switch (v.kind) {
      case Kind::scalar:
        return make_scalar(v.scalar * c);
      case Kind::minkowski:
      case Kind::poincare:
        return make_element(v.kind, *v.element * c);
      case Kind::form:
        return make_form(*v.form * c);
    }
    return v;
  }

  Element promote(const Value& v, Kind target) {
    if (v.kind == target) return *v.element;
    const auto& alg = target == Kind::poincare ? ctx_.poincare().presentation() : ctx_.minkowski().presentation();
    return Element::scalar(alg, v.scalar);
  }

  Value add(const Value& a, const Value& b, bool subtract) {
    const Value rhs = subtract ? scale(b, Scalar(-1)) : b;
    if (a.kind == Kind::scalar && rhs.kind == Kind::scalar) return make_scalar(a.scalar + rhs.scalar);
    if (a.kind == Kind::form || rhs.kind == Kind::form) {
      if (a.kind != rhs.kind) mismatch(a.kind, rhs.kind, "add");
      return make_form(*a.form + *rhs.form);
    }
    const Kind k = a.kind == Kind::scalar ? rhs.kind : a.kind;
    if (rhs.kind != Kind::scalar && rhs.kind != k) mismatch(a.kind, rhs.kind, "add");
    return make_element(k, promote(a, k) + promote(rhs, k));
  }

  Value mul(const Value& a, const Value& b) {
    if (a.kind == Kind::scalar) return scale(b, a.scalar);
    if (b.kind == Kind::scalar) return scale(a, b.scalar);
    if (a.kind == Kind::form && b.kind == Kind::form) mismatch(a.kind, b.kind, "multiply (use wedge)");
    if (a.kind == Kind::form) {
      if (b.kind != Kind::minkowski) mismatch(a.kind, b.kind, "multiply");
      return make_form(ctx_.calculus().right_mul(*a.form, *b.element));
    }
    if (b.kind == Kind::form) {
      if (a.kind != Kind::minkowski) mismatch(a.kind, b.kind, "multiply");
      return make_form(*a.element * *b.form);
    }
    if (a.kind != b.kind) mismatch(a.kind, b.kind, "multiply");
    return make_element(a.kind, *a.element * *b.element);
  }

  [[noreturn]] void mismatch(Kind a, Kind b, const std::string& op) const {
    throw AlgebraError(std::string("cannot ") + op + " " + kind_name(a) + " and " + kind_name(b));
  }

  std::string s_;
  const ExpressionContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Value parse_expression(const std::string& text, const ExpressionContext& ctx) { return Parser(text, ctx).parse(); }

Element as_minkowski(const Value& v, const ExpressionContext& ctx) {
  if (v.kind == Kind::minkowski) return *v.element;
  if (v.kind == Kind::scalar) return ctx.minkowski().scalar(v.scalar);
  throw AlgebraError(std::string("expected an M_kappa element, got ") + kind_name(v.kind));
}

OneForm as_form(const Value& v, const ExpressionContext& ctx) {
  if (v.kind == Kind::form) return *v.form;
  if (v.kind == Kind::scalar && v.scalar.is_zero()) return ctx.calculus().zero();
  throw AlgebraError(std::string("expected a one-form, got ") + kind_name(v.kind));
}

std::string to_string(const Value& v, const ExpressionContext& ctx) {
  switch (v.kind) {
    case Kind::scalar:
      return v.scalar.to_string();
    case Kind::minkowski:
    case Kind::poincare:
      return v.element->to_string();
    case Kind::form:
      return ctx.calculus().to_string(*v.form);
  }
  return "";
}

}  // namespace kappa
