#include "kappa/coaction.hpp"

#include "kappa/hopf.hpp"
#include "kappa/linalg.hpp"
#include "tally.hpp"

namespace kappa {

namespace {

Element mul_out(const TensorElement& t) {
  if (t.arity() != 2) throw AlgebraError("universal bimodule elements have two factors");
  return to_element(contract(t, 0));
}

}  // namespace

UniversalBimoduleElement::UniversalBimoduleElement(TensorElement value) : value_(std::move(value)) {
  if (value_.arity() != 2) throw AlgebraError("universal bimodule elements have two factors");
  if (!mul_out(value_).is_zero()) throw AlgebraError("not in the universal bimodule: sum a_k b_k != 0");
}

UniversalBimoduleElement& UniversalBimoduleElement::operator+=(const UniversalBimoduleElement& o) {
  value_ += o.value_;
  return *this;
}

UniversalBimoduleElement& UniversalBimoduleElement::operator-=(const UniversalBimoduleElement& o) {
  value_ -= o.value_;
  return *this;
}

UniversalBimoduleElement operator*(UniversalBimoduleElement a, const Scalar& c) {
  a.value_ *= c;
  return a;
}

UniversalBimoduleElement operator*(const Element& c, const UniversalBimoduleElement& q) {
  const auto& p = q.algebra();
  return UniversalBimoduleElement(TensorElement::pure({c, Element::scalar(p, Scalar::one())}) * q.value());
}

UniversalBimoduleElement operator*(const UniversalBimoduleElement& q, const Element& c) {
  const auto& p = q.algebra();
  return UniversalBimoduleElement(q.value() * TensorElement::pure({Element::scalar(p, Scalar::one()), c}));
}

UniversalBimoduleElement universal_d(const Element& a) {
  const Element one = Element::scalar(a.algebra(), Scalar::one());
  return UniversalBimoduleElement(TensorElement::pure({one, a}) - TensorElement::pure({a, one}));
}

UniversalBimoduleElement omega_univ(const Element& v) {
  if (!counit(v).is_zero()) throw AlgebraError("omega is defined on ker(eps); eps(v) = " + counit(v).to_string());
  const auto& p = v.algebra();
  return UniversalBimoduleElement(map_factor(coproduct(v), 0, [&p](const Word& w) { return antipode_word(*p, w); }));
}

TensorElement lift_rho_L_self(const TensorElement& q) {
  const auto& p = q.factors().at(0);
  TensorElement out({p, p, p});
  for (const auto& [ws, c] : q.terms()) {
    auto dx = coproduct_word(p, ws[0]);
    auto dy = coproduct_word(p, ws[1]);
    // (x1 (x) x2 (x) 1)(y1 (x) 1 (x) y2)
    out += insert_unit_factor(dx, 2, p) * insert_unit_factor(dy, 1, p) * c;
  }
  return out;
}

TensorElement lift_rho_R_self(const TensorElement& q) {
  const auto& p = q.factors().at(0);
  TensorElement out({p, p, p});
  for (const auto& [ws, c] : q.terms()) {
    auto dx = coproduct_word(p, ws[0]);
    auto dy = coproduct_word(p, ws[1]);
    // (x1 (x) 1 (x) x2)(1 (x) y1 (x) y2)
    out += insert_unit_factor(dx, 1, p) * insert_unit_factor(dy, 0, p) * c;
  }
  return out;
}

TensorElement insert_unit_factor(const TensorElement& t, std::size_t pos, const PresentationPtr& p) {
  std::vector<PresentationPtr> factors = t.factors();
  factors.insert(factors.begin() + static_cast<std::ptrdiff_t>(pos), p);
  TensorTerms terms;
  for (const auto& [ws, c] : t.terms()) {
    auto key = ws;
    key.insert(key.begin() + static_cast<std::ptrdiff_t>(pos), Word{});
    terms.emplace(std::move(key), c);
  }
  return {std::move(factors), std::move(terms)};
}

// ---------------------------------------------------------------------------

Coaction::Coaction(MinkowskiAlgebra m, PoincareAlgebra p) : m_(std::move(m)), p_(std::move(p)) {
  if (!(m_.metric() == p_.metric())) throw AlgebraError("coaction needs matching metrics");
}

const TensorElement& Coaction::rho_L_word(const Word& w) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  const auto& P = p_.presentation();
  const auto& M = m_.presentation();
  TensorElement result({P, M});
  if (w.empty()) {
    result = TensorElement::unit({P, M});
  } else if (w.size() == 1) {
    const std::size_t mu = w[0];
    for (std::size_t nu = 0; nu < m_.dimension(); ++nu)
      result += TensorElement::pure({p_.lambda(mu, nu), m_.x(nu)});
    result += TensorElement::pure({p_.a(mu), m_.one()});
  } else {
    result = rho_L_word(w.substr(0, w.size() - 1)) * rho_L_word(w.substr(w.size() - 1));
  }
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(w, std::move(result)).first->second;
}

TensorElement Coaction::rho_L(const Element& a) const {
  TensorElement out({p_.presentation(), m_.presentation()});
  for (const auto& [w, c] : a.terms()) out += rho_L_word(w) * c;
  return out;
}

TensorElement Coaction::rho_L_raw(const RawTerms& raw) const {
  const auto& P = p_.presentation();
  const auto& M = m_.presentation();
  std::function<TensorElement(Symbol)> img = [this](Symbol s) { return rho_L_word(Word{s}); };
  return extend_multiplicative<TensorElement>(raw, img, TensorElement::unit({P, M}), TensorElement({P, M}));
}

TensorElement Coaction::lift_rho_L(const TensorElement& q) const {
  const auto& P = p_.presentation();
  const auto& M = m_.presentation();
  TensorElement out({P, M, M});
  TensorTerms terms;
  for (const auto& [ws, c] : q.terms()) {
    const auto& rx = rho_L_word(ws.at(0));
    const auto& ry = rho_L_word(ws.at(1));
    for (const auto& [kx, cx] : rx.terms())
      for (const auto& [ky, cy] : ry.terms()) {
        const Scalar coef = c * cx * cy;
        for (const auto& [u, cu] : P->mul_words(kx[0], ky[0])) add_term(terms, {u, kx[1], ky[1]}, coef * cu);
      }
  }
  return {{P, M, M}, std::move(terms)};
}

Element Coaction::pi_raw(const RawTerms& raw) const {
  std::function<Element(Symbol)> img = [this](Symbol s) {
    const std::size_t n = p_.dimension();
    if (s < n) return m_.x(s);
    const std::size_t k = s - n;
    return m_.scalar(Scalar(delta(k / n, k % n)));
  };
  return extend_multiplicative<Element>(raw, img, m_.one(), m_.zero());
}

Element Coaction::pi(const Element& p) const {
  RawTerms raw(p.terms().begin(), p.terms().end());
  return pi_raw(raw);
}

// ---------------------------------------------------------------------------

namespace {

using detail::exact;
using detail::Outcome;
using detail::Tally;

Outcome compare(const OrthoIdeal& ortho, const TensorElement& a, const TensorElement& b) {
  if (a == b) return Outcome::exact;
  return ortho.equal_mod(a, b) ? Outcome::modulo : Outcome::fail;
}

/// Replaces factors k, k+1 of t by fn(word_k, word_{k+1}).
TensorElement apply_pair(const TensorElement& t, std::size_t k, const std::vector<PresentationPtr>& replacement,
                         const std::function<TensorElement(const Word&, const Word&)>& fn) {
  std::vector<PresentationPtr> factors(t.factors().begin(), t.factors().begin() + static_cast<std::ptrdiff_t>(k));
  factors.insert(factors.end(), replacement.begin(), replacement.end());
  factors.insert(factors.end(), t.factors().begin() + static_cast<std::ptrdiff_t>(k) + 2, t.factors().end());
  TensorTerms terms;
  for (const auto& [ws, c] : t.terms()) {
    const TensorElement image = fn(ws[k], ws[k + 1]);
    for (const auto& [us, cu] : image.terms()) {
      std::vector<Word> key(ws.begin(), ws.begin() + static_cast<std::ptrdiff_t>(k));
      key.insert(key.end(), us.begin(), us.end());
      key.insert(key.end(), ws.begin() + static_cast<std::ptrdiff_t>(k) + 2, ws.end());
      add_term(terms, key, c * cu);
    }
  }
  return {std::move(factors), std::move(terms)};
}

TensorElement pair_tensor(const PresentationPtr& p, const Word& a, const Word& b) {
  TensorTerms t;
  t.emplace(std::vector<Word>{a, b}, Scalar::one());
  return {{p, p}, std::move(t)};
}

/// (id (x) D) applied to the last factor: p (x) m -> p (x) 1 (x) m - p (x) m (x) 1
TensorElement id_tensor_d(const TensorElement& t) {
  const auto& m = t.factors().back();
  return insert_unit_factor(t, t.arity() - 1, m) - insert_unit_factor(t, t.arity(), m);
}

/// (D (x) id) applied to the first factor.
TensorElement d_tensor_id(const TensorElement& t) {
  const auto& m = t.factors().front();
  return insert_unit_factor(t, 0, m) - insert_unit_factor(t, 1, m);
}

/// A random element sum_i x_i D y_i of the universal bimodule, with the pairs.
struct BimoduleSample {
  std::vector<std::pair<Element, Element>> pairs;
  UniversalBimoduleElement q;
};

BimoduleSample random_bimodule(const MinkowskiAlgebra& m, std::mt19937_64& rng) {
  const auto& p = m.presentation();
  BimoduleSample s{{}, UniversalBimoduleElement(TensorElement({p, p}))};
  const std::size_t count = 1 + rng() % 2;
  for (std::size_t i = 0; i < count; ++i) {
    Element x = random_element(p, rng, 2, 2);
    Element y = random_element(p, rng, 2, 2);
    s.q += x * universal_d(y);
    s.pairs.emplace_back(std::move(x), std::move(y));
  }
  return s;
}

}  // namespace

Report verify_coaction_suite(const Coaction& c, const OrthoIdeal& ortho, std::size_t max_degree, std::uint64_t seed,
                             std::size_t samples) {
  Report r;
  r.suite = "coaction";
  const auto& m = c.minkowski();
  const auto& pa = c.poincare();
  const auto& M = m.presentation();
  const auto& P = pa.presentation();
  const auto words = normal_words_upto(M->size(), max_degree);
  const std::string what = "monomials of degree <= " + std::to_string(max_degree);
  auto word_elem = [&M](const Word& w) { return Element(M, Terms{{w, Scalar::one()}}); };
  auto pi_factor = [&c, &P, &M](const TensorElement& t, std::size_t k) {
    return expand_factor(t, k, {M}, [&c, &P, &M](const Word& u) {
      TensorTerms img;
      const Element image = c.pi(Element(P, Terms{{u, Scalar::one()}}));
      for (const auto& [v, cv] : image.terms()) img.emplace(std::vector<Word>{v}, cv);
      return TensorElement({M}, std::move(img));
    });
  };

  Tally unit, counit_law, coassoc, relations, d_compat, pi_rho;
  unit.record(exact(c.rho_L(m.one()) == TensorElement::unit({P, M})), "rho_L(I)");
  for (const Word& w : words) {
    const std::string where = M->word_to_string(w);
    const TensorElement& rw = c.rho_L_word(w);
    auto eps = to_element(collapse_factor(rw, 0, [&P](const Word& u) { return counit_word(*P, u); }));
    counit_law.record(exact(eps == word_elem(w)), where);
    auto lhs = expand_factor(rw, 1, {P, M}, [&c](const Word& u) { return c.rho_L_word(u); });
    auto rhs = expand_factor(rw, 0, {P, P}, [&P](const Word& u) { return coproduct_word(P, u); });
    coassoc.record(compare(ortho, lhs, rhs), where);
    auto lift_d = c.lift_rho_L(universal_d(word_elem(w)));
    d_compat.record(exact(lift_d == id_tensor_d(rw)), where);
    pi_rho.record(exact(pi_factor(rw, 0) == coproduct(word_elem(w))), where);
  }
  for (const auto& rel : m.relations()) relations.record(compare(ortho, c.rho_L_raw(rel.raw), TensorElement({P, M})), rel.label);
  unit.emit(r, "rho_L.unit", "check");
  counit_law.emit(r, "rho_L.counit", what);
  coassoc.emit(r, "rho_L.coassociativity", what);
  relations.emit(r, "rho_L.relations", "relations");
  d_compat.emit(r, "lift.d_compatibility", what);
  pi_rho.emit(r, "pi.rho_L", what);

  Tally pi_rel, pi_cop;
  for (const auto& rel : pa.relations()) pi_rel.record(exact(c.pi_raw(rel.raw).is_zero()), rel.label);
  for (const Word& w : normal_words_upto(P->size(), max_degree)) {
    const Element pw(P, Terms{{w, Scalar::one()}});
    auto lhs = coproduct(c.pi(pw));
    auto rhs = pi_factor(pi_factor(coproduct_word(P, w), 0), 1);
    pi_cop.record(exact(lhs == rhs), P->word_to_string(w));
  }
  pi_rel.emit(r, "pi.relations", "relations");
  pi_cop.emit(r, "pi.coproduct", "Poincare monomials of degree <= " + std::to_string(max_degree));

  std::mt19937_64 rng(seed);
  Tally bimod, left_mod, right_mod, lift_coassoc, lift_counit, x_dy;
  Tally r_left_mod, r_right_mod, r_coassoc, r_counit, r_x_dy, bi_commute;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::string where = "sample " + std::to_string(s);
    auto sample = random_bimodule(m, rng);
    const auto& q = sample.q;
    auto lq = c.lift_rho_L(q);
    bimod.record(ortho.reduce_all(contract(lq, 1)).is_zero() ? (contract(lq, 1).is_zero() ? Outcome::exact : Outcome::modulo)
                                                            : Outcome::fail,
                 where);
    Element x = random_element(M, rng, 2, 2);
    auto rx = c.rho_L(x);
    left_mod.record(compare(ortho, c.lift_rho_L(x * q), insert_unit_factor(rx, 2, M) * lq), where);
    right_mod.record(compare(ortho, c.lift_rho_L(q * x), lq * insert_unit_factor(rx, 1, M)), where);
    auto lhs = apply_pair(lq, 1, {P, M, M}, [&c, &M](const Word& a, const Word& b) { return c.lift_rho_L(pair_tensor(M, a, b)); });
    auto rhs = expand_factor(lq, 0, {P, P}, [&P](const Word& u) { return coproduct_word(P, u); });
    lift_coassoc.record(compare(ortho, lhs, rhs), where);
    auto eps = collapse_factor(lq, 0, [&P](const Word& u) { return counit_word(*P, u); });
    lift_counit.record(exact(eps == q.value()), where);
    TensorElement formula({P, M, M});
    for (const auto& [xi, yi] : sample.pairs)
      formula += insert_unit_factor(c.rho_L(xi), 2, M) * id_tensor_d(c.rho_L(yi));
    x_dy.record(compare(ortho, lq, formula), where);

    // right self-coaction of M_kappa
    auto rq = lift_rho_R_self(q.value());
    auto dx = coproduct(x);
    r_left_mod.record(exact(lift_rho_R_self((x * q).value()) == insert_unit_factor(dx, 1, M) * rq), where);
    r_right_mod.record(exact(lift_rho_R_self((q * x).value()) == rq * insert_unit_factor(dx, 0, M)), where);
    auto rl = apply_pair(rq, 0, {M, M, M}, [&M](const Word& a, const Word& b) { return lift_rho_R_self(pair_tensor(M, a, b)); });
    auto rr = expand_factor(rq, 2, {M, M}, [&M](const Word& u) { return coproduct_word(M, u); });
    r_coassoc.record(exact(rl == rr), where);
    auto reps = collapse_factor(rq, 2, [&M](const Word& u) { return counit_word(*M, u); });
    r_counit.record(exact(reps == q.value()), where);
    TensorElement rformula({M, M, M});
    for (const auto& [xi, yi] : sample.pairs)
      rformula += insert_unit_factor(coproduct(xi), 1, M) * d_tensor_id(coproduct(yi));
    r_x_dy.record(exact(rq == rformula), where);
    // (id (x) rho~_R) rho~_L = (rho~_L (x) id) rho~_R
    auto ll = lift_rho_L_self(q.value());
    auto b1 = apply_pair(ll, 1, {M, M, M}, [&M](const Word& a, const Word& b) { return lift_rho_R_self(pair_tensor(M, a, b)); });
    auto b2 = apply_pair(rq, 0, {M, M, M}, [&M](const Word& a, const Word& b) { return lift_rho_L_self(pair_tensor(M, a, b)); });
    bi_commute.record(exact(b1 == b2), where);
  }
  const std::string sampled = "random bimodule elements (seed " + std::to_string(seed) + ")";
  bimod.emit(r, "lift.bimodule_target", sampled);
  left_mod.emit(r, "lift.left_module", sampled);
  right_mod.emit(r, "lift.right_module", sampled);
  lift_coassoc.emit(r, "lift.coaction", sampled);
  lift_counit.emit(r, "lift.counit", sampled);
  x_dy.emit(r, "lift.x_dy_formula", sampled);
  r_left_mod.emit(r, "self.right_lift_left_module", sampled);
  r_right_mod.emit(r, "self.right_lift_right_module", sampled);
  r_coassoc.emit(r, "self.right_lift_coaction", sampled);
  r_counit.emit(r, "self.right_lift_counit", sampled);
  r_x_dy.emit(r, "self.right_x_dy_formula", sampled);
  bi_commute.emit(r, "self.lifts_commute", sampled);

  Tally r_d, commute, r_inv;
  for (const Word& w : words) {
    const std::string where = M->word_to_string(w);
    auto dw = universal_d(word_elem(w));
    r_d.record(exact(lift_rho_R_self(dw.value()) == d_tensor_id(coproduct(word_elem(w)))), where);
    commute.record(exact(coassoc_left(M, w) == coassoc_right(M, w)), where);
  }
  for (std::size_t mu = 0; mu < m.dimension(); ++mu) {
    auto dx = universal_d(m.x(mu));
    r_inv.record(exact(lift_rho_R_self(dx.value()) == insert_unit_factor(dx.value(), 2, M)), "x" + std::to_string(mu));
  }
  r_d.emit(r, "self.right_d_compatibility", what);
  commute.emit(r, "self.coactions_commute", what);
  r_inv.emit(r, "self.right_invariance_of_dx", "generators");
  return r;
}

Report verify_x_munu_covariance(const Coaction& c, const OrthoIdeal& ortho) {
  Report r;
  r.suite = "x-munu-covariance";
  const auto& m = c.minkowski();
  const auto& pa = c.poincare();
  const auto& P = pa.presentation();
  const auto& M = m.presentation();
  const std::size_t n = m.dimension();
  Tally sym, cov, trace;
  std::vector<std::vector<UniversalBimoduleElement>> om;
  for (std::size_t mu = 0; mu < n; ++mu) {
    om.emplace_back();
    for (std::size_t nu = 0; nu < n; ++nu) {
      sym.record(exact(m.x_munu(mu, nu) == m.x_munu(nu, mu)), "(" + std::to_string(mu) + "," + std::to_string(nu) + ")");
      om.back().push_back(omega_univ(m.x_munu(mu, nu)));
    }
  }
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) {
      auto lhs = c.lift_rho_L(om[mu][nu]);
      TensorElement rhs({P, M, M});
      for (std::size_t al = 0; al < n; ++al)
        for (std::size_t be = 0; be < n; ++be) {
          TensorElement lam = TensorElement::pure({pa.lambda(mu, al) * pa.lambda(nu, be), m.one(), m.one()});
          rhs += lam * insert_unit_factor(om[al][be].value(), 0, P);
        }
      cov.record(compare(ortho, lhs, rhs), "(" + std::to_string(mu) + "," + std::to_string(nu) + ")");
    }
  auto op = omega_univ(m.phi());
  trace.record(compare(ortho, c.lift_rho_L(op), insert_unit_factor(op.value(), 0, P)), "phi");
  sym.emit(r, "x_munu.symmetry", "index pairs");
  cov.emit(r, "x_munu.covariance", "index pairs");
  trace.emit(r, "phi.invariance", "trace element");
  return r;
}

}  // namespace kappa
