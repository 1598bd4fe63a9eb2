#include "kappa/engine.hpp"

#include <algorithm>
#include <string_view>

namespace kappa {

void add_term(Terms& terms, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void add_term(TensorTerms& terms, const std::vector<Word>& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

namespace {

Terms mul_terms(const Presentation& p, const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Scalar c = ca * cb;
      for (const auto& [w, cw] : p.mul_words(wa, wb)) add_term(out, w, c * cw);
    }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Presentation

Presentation::Presentation(PresentationData data) : data_(std::move(data)) {
  const std::size_t n = data_.generators.size();
  if (n == 0 || n > 255) throw AlgebraError("presentation needs 1..255 generators");
  if (data_.heavy.empty()) data_.heavy.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) by_name_.emplace(data_.generators[i], static_cast<Symbol>(i));
  for (const auto& [pair, corr] : data_.swap_rules) {
    if (pair.first <= pair.second || pair.first >= n)
      throw AlgebraError("swap rule must be keyed by (later, earlier) generator pair");
    Word lhs{pair.first, pair.second};
    auto key = order_key(lhs);
    for (const auto& [w, c] : corr) {
      if (!is_normal(w)) throw AlgebraError("swap-rule correction words must be normal");
      if (!(order_key(w) < key)) throw AlgebraError("swap-rule correction does not decrease the termination order");
    }
  }
  const bool tables = !data_.coproduct.empty();
  if (tables && (data_.counit.size() != n || data_.antipode.size() != n || data_.star.size() != n ||
                 data_.coproduct.size() != n))
    throw AlgebraError("Hopf/star tables must cover every generator");
}

Symbol Presentation::symbol(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw AlgebraError("unknown generator symbol '" + name + "' in " + data_.name);
  return it->second;
}

const Terms* Presentation::swap_rule(Symbol later, Symbol earlier) const {
  auto it = data_.swap_rules.find({later, earlier});
  return it == data_.swap_rules.end() ? nullptr : &it->second;
}

std::tuple<std::size_t, std::size_t, std::size_t> Presentation::order_key(const Word& w) const {
  std::size_t heavy = 0;
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (data_.heavy[w[i]]) ++heavy;
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inversions;
  }
  return {w.size(), heavy, inversions};
}

namespace {

void accumulate(const Presentation& p, const Word& w, Symbol g, const Scalar& c, Terms& out);

}  // namespace

const Terms& Presentation::mul_word_gen(const Word& w, Symbol g) const {
  Word key = w;
  key.push_back(g);
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Terms result;
  if (w.empty() || w.back() <= g) {
    result.emplace(key, Scalar::one());
  } else {
    const Symbol h = w.back();
    const Word prefix = w.substr(0, w.size() - 1);
    // prefix * h * g = prefix * g * h + prefix * correction
    Terms left;
    accumulate(*this, prefix, g, Scalar::one(), left);
    for (const auto& [u, c] : left) accumulate(*this, u, h, c, result);
    if (const Terms* corr = swap_rule(h, g)) {
      for (const auto& [v, c] : *corr)
        for (const auto& [u, cu] : mul_words(prefix, v)) add_term(result, u, c * cu);
    }
  }
  std::lock_guard lock(cache_mutex_);
  return cache_.try_emplace(std::move(key), std::move(result)).first->second;
}

namespace {

void accumulate(const Presentation& p, const Word& w, Symbol g, const Scalar& c, Terms& out) {
  if (w.empty() || w.back() <= g) {
    Word v = w;
    v.push_back(g);
    add_term(out, v, c);
    return;
  }
  for (const auto& [u, cu] : p.mul_word_gen(w, g)) add_term(out, u, c * cu);
}

}  // namespace

Terms Presentation::mul_words(const Word& a, const Word& b) const {
  Terms cur;
  cur.emplace(a, Scalar::one());
  for (Symbol s : b) {
    if (cur.size() == 1 && (cur.begin()->first.empty() || cur.begin()->first.back() <= s)) {
      auto node = cur.extract(cur.begin());
      node.key().push_back(s);
      cur.insert(std::move(node));
      continue;
    }
    Terms next;
    for (const auto& [u, c] : cur) accumulate(*this, u, s, c, next);
    cur = std::move(next);
  }
  return cur;
}

Terms Presentation::normalize_word(const Word& w) const {
  for (Symbol s : w)
    if (s >= size()) throw AlgebraError("unknown generator index " + std::to_string(s) + " in " + data_.name);
  return mul_words(Word{}, w);
}

std::string Presentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += data_.generators[w[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(PresentationPtr alg, Terms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (!is_normal(it->first)) throw AlgebraError("Element terms must be normal words; use from_raw");
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

Element Element::scalar(PresentationPtr alg, const Scalar& c) {
  Element e(std::move(alg));
  add_term(e.terms_, Word{}, c);
  return e;
}

Element Element::generator(PresentationPtr alg, Symbol s, const Scalar& c) {
  if (s >= alg->size()) throw AlgebraError("generator index out of range");
  Element e(std::move(alg));
  add_term(e.terms_, Word{s}, c);
  return e;
}

Element Element::from_raw(PresentationPtr alg, const RawTerms& raw) {
  Element e(alg);
  for (const auto& [w, c] : raw)
    for (const auto& [u, cu] : alg->normalize_word(w)) add_term(e.terms_, u, c * cu);
  return e;
}

std::size_t Element::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

Scalar Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void Element::check_same(const Element& o) const {
  if (alg_ != o.alg_ && alg_->name() != o.alg_->name())
    throw AlgebraError("presentation mismatch: " + alg_->name() + " vs " + o.alg_->name());
}

Element& Element::operator+=(const Element& o) {
  check_same(o);
  for (const auto& [w, c] : o.terms_) add_term(terms_, w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_same(o);
  for (const auto& [w, c] : o.terms_) add_term(terms_, w, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  a.check_same(b);
  return {a.alg_, mul_terms(*a.alg_, a.terms_, b.terms_)};
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

namespace {

std::string coefficient_prefix(const Scalar& c) {
  if (c.is_one()) return "";
  if (c == Scalar(-1)) return "-";
  if (c.needs_parens()) return "(" + c.to_string() + ")*";
  return c.to_string() + "*";
}

void append_signed(std::string& out, const std::string& t) {
  if (out.empty()) {
    out = t;
  } else if (!t.empty() && t[0] == '-') {
    out += " - " + t.substr(1);
  } else {
    out += " + " + t;
  }
}

}  // namespace

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    std::string t = w.empty() ? c.to_string() : coefficient_prefix(c) + alg_->word_to_string(w);
    append_signed(out, t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hopf and star maps

Scalar counit_word(const Presentation& p, const Word& w) {
  Scalar c = Scalar::one();
  for (Symbol s : w) {
    c *= p.counit_of(s);
    if (c.is_zero()) break;
  }
  return c;
}

Terms antipode_word(const Presentation& p, const Word& w) {
  Terms cur;
  cur.emplace(Word{}, Scalar::one());
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = mul_terms(p, cur, p.antipode_of(*it));
  return cur;
}

Terms star_word(const Presentation& p, const Word& w) {
  Terms cur;
  cur.emplace(Word{}, Scalar::one());
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = mul_terms(p, cur, p.star_of(*it));
  return cur;
}

Scalar counit(const Element& a) {
  Scalar c;
  for (const auto& [w, v] : a.terms()) c += v * counit_word(*a.algebra(), w);
  return c;
}

Element antipode(const Element& a) {
  Terms out;
  for (const auto& [w, v] : a.terms())
    for (const auto& [u, cu] : antipode_word(*a.algebra(), w)) add_term(out, u, v * cu);
  return {a.algebra(), std::move(out)};
}

Element star(const Element& a) {
  Terms out;
  for (const auto& [w, v] : a.terms()) {
    Scalar cv = v.conj();
    for (const auto& [u, cu] : star_word(*a.algebra(), w)) add_term(out, u, cv * cu);
  }
  return {a.algebra(), std::move(out)};
}

TensorElement coproduct_word(const PresentationPtr& p, const Word& w) {
  TensorElement cur = TensorElement::unit({p, p});
  for (Symbol s : w) cur = cur * TensorElement({p, p}, p->coproduct_of(s));
  return cur;
}

TensorElement coproduct(const Element& a) {
  const auto& p = a.algebra();
  TensorElement out({p, p});
  for (const auto& [w, v] : a.terms()) out += coproduct_word(p, w) * v;
  return out;
}

// ---------------------------------------------------------------------------
// TensorElement

TensorElement::TensorElement(std::vector<PresentationPtr> factors, TensorTerms terms)
    : factors_(std::move(factors)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != factors_.size()) throw AlgebraError("tensor term arity mismatch");
    for (const auto& w : it->first)
      if (!is_normal(w)) throw AlgebraError("tensor terms must be normal in each factor");
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

TensorElement TensorElement::unit(std::vector<PresentationPtr> factors) {
  TensorElement t(std::move(factors));
  t.terms_.emplace(std::vector<Word>(t.factors_.size()), Scalar::one());
  return t;
}

TensorElement TensorElement::pure(const std::vector<Element>& parts) {
  std::vector<PresentationPtr> factors;
  for (const auto& e : parts) factors.push_back(e.algebra());
  TensorElement t(factors);
  TensorTerms cur;
  cur.emplace(std::vector<Word>{}, Scalar::one());
  for (const auto& e : parts) {
    TensorTerms next;
    for (const auto& [ws, c] : cur)
      for (const auto& [w, v] : e.terms()) {
        auto k = ws;
        k.push_back(w);
        add_term(next, k, c * v);
      }
    cur = std::move(next);
  }
  t.terms_ = std::move(cur);
  return t;
}

void TensorElement::check_same(const TensorElement& o) const {
  if (factors_.size() != o.factors_.size()) throw AlgebraError("tensor factor mismatch (arity)");
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (factors_[k] != o.factors_[k] && factors_[k]->name() != o.factors_[k]->name())
      throw AlgebraError("tensor factor mismatch at position " + std::to_string(k));
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  check_same(o);
  for (const auto& [w, c] : o.terms_) add_term(terms_, w, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  check_same(o);
  for (const auto& [w, c] : o.terms_) add_term(terms_, w, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  a.check_same(b);
  const std::size_t n = a.factors_.size();
  TensorElement out(a.factors_);
  std::vector<Terms> parts(n);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      for (std::size_t k = 0; k < n; ++k) parts[k] = a.factors_[k]->mul_words(wa[k], wb[k]);
      // Cartesian product of the per-factor normal forms.
      std::vector<std::pair<std::vector<Word>, Scalar>> partial{{{}, ca * cb}};
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::pair<std::vector<Word>, Scalar>> next;
        next.reserve(partial.size() * parts[k].size());
        for (const auto& [ws, c] : partial)
          for (const auto& [w, cw] : parts[k]) {
            auto key = ws;
            key.push_back(w);
            next.emplace_back(std::move(key), c * cw);
          }
        partial = std::move(next);
      }
      for (const auto& [ws, c] : partial) add_term(out.terms_, ws, c);
    }
  return out;
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) { return a * b; }

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [ws, c] = *it;
    std::string t;
    for (std::size_t k = 0; k < ws.size(); ++k) {
      if (k > 0) t += " (x) ";
      t += factors_[k]->word_to_string(ws[k]);
    }
    std::string prefix;
    if (c.is_one()) {
    } else if (c == Scalar(-1)) {
      prefix = "-";
    } else if (c.needs_parens()) {
      prefix = "(" + c.to_string() + ")*";
    } else {
      prefix = c.to_string() + "*";
    }
    append_signed(out, prefix + t);
  }
  return out;
}

TensorElement map_factor(const TensorElement& t, std::size_t k, const std::function<Terms(const Word&)>& fn) {
  TensorElement out(t.factors());
  TensorTerms terms;
  for (const auto& [ws, c] : t.terms()) {
    for (const auto& [u, cu] : fn(ws.at(k))) {
      auto key = ws;
      key[k] = u;
      add_term(terms, key, c * cu);
    }
  }
  return {t.factors(), std::move(terms)};
}

TensorElement expand_factor(const TensorElement& t, std::size_t k, const std::vector<PresentationPtr>& replacement,
                            const std::function<TensorElement(const Word&)>& fn) {
  std::vector<PresentationPtr> factors;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i == k) {
      factors.insert(factors.end(), replacement.begin(), replacement.end());
    } else {
      factors.push_back(t.factors()[i]);
    }
  }
  TensorTerms terms;
  for (const auto& [ws, c] : t.terms()) {
    TensorElement img = fn(ws.at(k));
    if (img.arity() != replacement.size()) throw AlgebraError("expand_factor: replacement arity mismatch");
    for (const auto& [us, cu] : img.terms()) {
      std::vector<Word> key(ws.begin(), ws.begin() + static_cast<std::ptrdiff_t>(k));
      key.insert(key.end(), us.begin(), us.end());
      key.insert(key.end(), ws.begin() + static_cast<std::ptrdiff_t>(k) + 1, ws.end());
      add_term(terms, key, c * cu);
    }
  }
  return {std::move(factors), std::move(terms)};
}

TensorElement collapse_factor(const TensorElement& t, std::size_t k, const std::function<Scalar(const Word&)>& fn) {
  std::vector<PresentationPtr> factors = t.factors();
  factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(k));
  TensorTerms terms;
  for (const auto& [ws, c] : t.terms()) {
    Scalar v = fn(ws.at(k));
    if (v.is_zero()) continue;
    auto key = ws;
    key.erase(key.begin() + static_cast<std::ptrdiff_t>(k));
    add_term(terms, key, c * v);
  }
  return {std::move(factors), std::move(terms)};
}

TensorElement contract(const TensorElement& t, std::size_t k) {
  if (k + 1 >= t.arity()) throw AlgebraError("contract: factor index out of range");
  const auto& p = t.factors()[k];
  if (p != t.factors()[k + 1] && p->name() != t.factors()[k + 1]->name())
    throw AlgebraError("contract: factors belong to different presentations");
  std::vector<PresentationPtr> factors = t.factors();
  factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(k) + 1);
  TensorTerms terms;
  for (const auto& [ws, c] : t.terms()) {
    for (const auto& [u, cu] : p->mul_words(ws[k], ws[k + 1])) {
      auto key = ws;
      key[k] = u;
      key.erase(key.begin() + static_cast<std::ptrdiff_t>(k) + 1);
      add_term(terms, key, c * cu);
    }
  }
  return {std::move(factors), std::move(terms)};
}

Element to_element(const TensorElement& t) {
  if (t.arity() != 1) throw AlgebraError("to_element: tensor must have exactly one factor");
  Terms terms;
  for (const auto& [ws, c] : t.terms()) add_term(terms, ws[0], c);
  return {t.factors()[0], std::move(terms)};
}

std::map<std::vector<Word>, Element, TupleLess> split_factor(const TensorElement& t, std::size_t k) {
  std::map<std::vector<Word>, Element, TupleLess> out;
  const auto& p = t.factors().at(k);
  for (const auto& [ws, c] : t.terms()) {
    auto key = ws;
    key.erase(key.begin() + static_cast<std::ptrdiff_t>(k));
    auto it = out.try_emplace(key, Element(p)).first;
    it->second += Element(p, Terms{{ws[k], c}});
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Element random_element(const PresentationPtr& p, std::mt19937_64& rng, std::size_t max_degree,
                       std::size_t max_terms) {
  auto pick = [&rng](std::uint64_t k) { return static_cast<long>(rng() % k); };
  RawTerms raw;
  const std::size_t count = 1 + static_cast<std::size_t>(pick(max_terms));
  for (std::size_t t = 0; t < count; ++t) {
    Word w;
    const std::size_t len = static_cast<std::size_t>(pick(max_degree + 1));
    for (std::size_t j = 0; j < len; ++j) w.push_back(static_cast<Symbol>(pick(p->size())));
    GaussianRational c(mpq_class(pick(7) - 3, 1 + pick(2)), mpq_class(pick(3) - 1));
    if (c.is_zero()) c = 1;
    raw.emplace_back(std::move(w), Scalar(c, static_cast<int>(pick(2))));
  }
  return Element::from_raw(p, raw);
}

}  // namespace kappa
