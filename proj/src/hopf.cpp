#include "kappa/hopf.hpp"

#include "tally.hpp"

namespace kappa {

TensorElement coassoc_left(const PresentationPtr& p, const Word& w) {
  return expand_factor(coproduct_word(p, w), 0, {p, p}, [&p](const Word& u) { return coproduct_word(p, u); });
}

TensorElement coassoc_right(const PresentationPtr& p, const Word& w) {
  return expand_factor(coproduct_word(p, w), 1, {p, p}, [&p](const Word& u) { return coproduct_word(p, u); });
}

Element counit_left(const PresentationPtr& p, const Word& w) {
  return to_element(collapse_factor(coproduct_word(p, w), 0, [&p](const Word& u) { return counit_word(*p, u); }));
}

Element counit_right(const PresentationPtr& p, const Word& w) {
  return to_element(collapse_factor(coproduct_word(p, w), 1, [&p](const Word& u) { return counit_word(*p, u); }));
}

Element antipode_left(const PresentationPtr& p, const Word& w) {
  auto t = map_factor(coproduct_word(p, w), 0, [&p](const Word& u) { return antipode_word(*p, u); });
  return to_element(contract(t, 0));
}

Element antipode_right(const PresentationPtr& p, const Word& w) {
  auto t = map_factor(coproduct_word(p, w), 1, [&p](const Word& u) { return antipode_word(*p, u); });
  return to_element(contract(t, 0));
}

TensorElement star_tensor(const TensorElement& t) {
  TensorTerms conj;
  for (const auto& [ws, c] : t.terms()) conj.emplace(ws, c.conj());
  TensorElement out(t.factors(), std::move(conj));
  for (std::size_t k = 0; k < t.arity(); ++k) {
    const auto& p = t.factors()[k];
    out = map_factor(out, k, [&p](const Word& u) { return star_word(*p, u); });
  }
  return out;
}

TensorElement coproduct_raw(const PresentationPtr& p, const RawTerms& raw) {
  std::function<TensorElement(Symbol)> img = [&p](Symbol s) { return TensorElement({p, p}, p->coproduct_of(s)); };
  return extend_multiplicative<TensorElement>(raw, img, TensorElement::unit({p, p}), TensorElement({p, p}));
}

Scalar counit_raw(const Presentation& p, const RawTerms& raw) {
  Scalar total;
  for (const auto& [w, c] : raw) total += c * counit_word(p, w);
  return total;
}

Element star_raw(const PresentationPtr& p, const RawTerms& raw) {
  RawTerms reversed;
  for (const auto& [w, c] : raw) reversed.emplace_back(Word(w.rbegin(), w.rend()), c.conj());
  std::function<Element(Symbol)> img = [&p](Symbol s) { return Element(p, p->star_of(s)); };
  return extend_multiplicative<Element>(reversed, img, Element::scalar(p, Scalar::one()), Element(p));
}

namespace {

using detail::exact;
using detail::Outcome;
using detail::Tally;

std::string monomial_range(std::size_t d) { return "monomials of degree <= " + std::to_string(d); }

}  // namespace

Report verify_hopf_minkowski(const MinkowskiAlgebra& alg, std::size_t max_degree) {
  Report r;
  r.suite = "hopf-minkowski";
  const auto& p = alg.presentation();
  const auto words = normal_words_upto(p->size(), max_degree);
  Tally coassoc, counit_l, counit_r, anti_l, anti_r, star_cop, anti_star;
  for (const Word& w : words) {
    const std::string where = p->word_to_string(w);
    const Element mono(p, Terms{{w, Scalar::one()}});
    const Element unit_eps = alg.scalar(counit_word(*p, w));
    auto lhs = coassoc_left(p, w), rhs = coassoc_right(p, w);
    coassoc.record(exact(lhs == rhs), where, lhs.to_string() + " vs " + rhs.to_string());
    auto cl = counit_left(p, w), cr = counit_right(p, w);
    counit_l.record(exact(cl == mono), where, cl.to_string());
    counit_r.record(exact(cr == mono), where, cr.to_string());
    auto al = antipode_left(p, w), ar = antipode_right(p, w);
    anti_l.record(exact(al == unit_eps), where, al.to_string());
    anti_r.record(exact(ar == unit_eps), where, ar.to_string());
    auto c1 = coproduct(star(mono)), c2 = star_tensor(coproduct(mono));
    star_cop.record(exact(c1 == c2), where, c1.to_string() + " vs " + c2.to_string());
    auto s = star(antipode(star(antipode(mono))));
    anti_star.record(exact(s == mono), where, s.to_string());
  }
  const std::string what = monomial_range(max_degree);
  coassoc.emit(r, "coassociativity", what);
  counit_l.emit(r, "counit.left", what);
  counit_r.emit(r, "counit.right", what);
  anti_l.emit(r, "antipode.left", what);
  anti_r.emit(r, "antipode.right", what);
  star_cop.emit(r, "star.coproduct", what);
  anti_star.emit(r, "star.antipode_involution", what);

  Tally rel_cop, rel_eps, rel_star, rel_nf;
  for (const auto& rel : alg.relations()) {
    rel_nf.record(exact(Element::from_raw(p, rel.raw).is_zero()), rel.label, "relation not encoded");
    auto d = coproduct_raw(p, rel.raw);
    rel_cop.record(exact(d.is_zero()), rel.label, d.to_string());
    auto e = counit_raw(*p, rel.raw);
    rel_eps.record(exact(e.is_zero()), rel.label, e.to_string());
    auto s = star_raw(p, rel.raw);
    rel_star.record(exact(s.is_zero()), rel.label, s.to_string());
  }
  rel_nf.emit(r, "relations.rewriting", "relations");
  rel_cop.emit(r, "relations.coproduct", "relations");
  rel_eps.emit(r, "relations.counit", "relations");
  rel_star.emit(r, "relations.star", "relations");
  return r;
}

Report verify_hopf_poincare(const PoincareAlgebra& alg, const OrthoIdeal& ortho, std::size_t max_degree) {
  Report r;
  r.suite = "hopf-poincare";
  const auto& p = alg.presentation();
  auto tensor_outcome = [&ortho](const TensorElement& a, const TensorElement& b) {
    if (a == b) return Outcome::exact;
    return ortho.equal_mod(a, b) ? Outcome::modulo : Outcome::fail;
  };
  auto element_outcome = [&ortho](const Element& a, const Element& b) {
    if (a == b) return Outcome::exact;
    return ortho.equal_mod(a, b) ? Outcome::modulo : Outcome::fail;
  };

  Tally rel_cop, rel_eps, rel_star, rel_nf;
  for (const auto& rel : alg.relations()) {
    rel_nf.record(exact(Element::from_raw(p, rel.raw).is_zero()), rel.label, "relation not encoded");
    auto d = coproduct_raw(p, rel.raw);
    rel_cop.record(tensor_outcome(d, TensorElement(d.factors())), rel.label, d.to_string());
    auto e = counit_raw(*p, rel.raw);
    rel_eps.record(exact(e.is_zero()), rel.label, e.to_string());
    auto s = star_raw(p, rel.raw);
    rel_star.record(exact(s.is_zero()), rel.label, s.to_string());
  }
  rel_nf.emit(r, "relations.rewriting", "relations");
  rel_cop.emit(r, "relations.coproduct", "relations");
  rel_eps.emit(r, "relations.counit", "relations");
  rel_star.emit(r, "relations.star", "relations");

  Tally coassoc, counit_l, counit_r, star_cop;
  for (const Word& w : normal_words_upto(p->size(), max_degree)) {
    const std::string where = p->word_to_string(w);
    const Element mono(p, Terms{{w, Scalar::one()}});
    auto lhs = coassoc_left(p, w), rhs = coassoc_right(p, w);
    coassoc.record(tensor_outcome(lhs, rhs), where, (lhs - rhs).to_string());
    auto cl = counit_left(p, w), cr = counit_right(p, w);
    counit_l.record(element_outcome(cl, mono), where, cl.to_string());
    counit_r.record(element_outcome(cr, mono), where, cr.to_string());
    auto c1 = coproduct(star(mono)), c2 = star_tensor(coproduct(mono));
    star_cop.record(tensor_outcome(c1, c2), where, (c1 - c2).to_string());
  }
  const std::string what = monomial_range(max_degree);
  coassoc.emit(r, "coassociativity", what);
  counit_l.emit(r, "counit.left", what);
  counit_r.emit(r, "counit.right", what);
  star_cop.emit(r, "star.coproduct", what);

  // m(S (x) id)Delta(w) and m(id (x) S)Delta(w) have degree at most 3#a + 2#L.
  const std::size_t bound = ortho.max_degree();
  Tally anti_l, anti_r;
  for (const Word& w : normal_words_upto(p->size(), max_degree)) {
    std::size_t weight = 0;
    for (Symbol s : w) weight += alg.is_translation(s) ? 3 : 2;
    if (weight > bound) continue;
    const std::string where = p->word_to_string(w);
    const Element unit_eps = Element::scalar(p, counit_word(*p, w));
    auto al = antipode_left(p, w), ar = antipode_right(p, w);
    anti_l.record(element_outcome(al, unit_eps), where, al.to_string());
    anti_r.record(element_outcome(ar, unit_eps), where, ar.to_string());
  }
  const std::string anti_what = monomial_range(max_degree) + " with 3#a + 2#L <= " + std::to_string(bound);
  anti_l.emit(r, "antipode.left", anti_what);
  anti_r.emit(r, "antipode.right", anti_what);

  Tally o_eps, o_cop, o_anti, o_star, o_stable;
  const auto& gens = ortho.generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& o = gens[k];
    const std::string where = "o" + std::to_string(k);
    o_eps.record(exact(counit(o).is_zero()), where, counit(o).to_string());
    o_cop.record(ortho.reduce_all(coproduct(o)).is_zero() ? Outcome::exact : Outcome::fail, where,
                 "coproduct leaves P(x)J + J(x)P");
    o_anti.record(ortho.contains(antipode(o)) ? Outcome::exact : Outcome::fail, where, antipode(o).to_string());
    o_star.record(ortho.contains(star(o)) ? Outcome::exact : Outcome::fail, where, star(o).to_string());
    for (std::size_t al = 0; al < alg.dimension(); ++al) {
      auto c = commutator(alg.a(al), o);
      o_stable.record(ortho.contains(c) ? Outcome::exact : Outcome::fail, where + ",a" + std::to_string(al),
                      "[a,o] reduces to " + ortho.reduce(c).to_string());
    }
  }
  o_eps.emit(r, "ortho.counit", "orthogonality generators");
  o_cop.emit(r, "ortho.coproduct", "orthogonality generators in P(x)J + J(x)P");
  o_anti.emit(r, "ortho.antipode", "orthogonality generators mapped into J");
  o_star.emit(r, "ortho.star", "orthogonality generators mapped into J");
  o_stable.emit(r, "ortho.translation_stability", "commutators [a, o] in J");
  return r;
}

}  // namespace kappa
