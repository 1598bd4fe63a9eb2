#include "kappa/poincare.hpp"

namespace kappa {

namespace {

std::string idx(std::size_t mu) { return std::to_string(mu); }

PresentationData poincare_rules(const Metric& g) {
  const std::size_t n = g.dimension();
  PresentationData data;
  data.name = "P_kappa(n=" + idx(n) + "," + g.to_string() + ")";
  for (std::size_t mu = 0; mu < n; ++mu) data.generators.push_back("a[" + idx(mu) + "]");
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) data.generators.push_back("L[" + idx(mu) + "," + idx(nu) + "]");
  data.heavy.assign(n + n * n, false);
  for (std::size_t mu = 0; mu < n; ++mu) data.heavy[mu] = true;

  const Scalar il = Scalar::lambda(1, GaussianRational::i());
  auto A = [](std::size_t mu) { return static_cast<Symbol>(mu); };
  auto L = [n](std::size_t mu, std::size_t nu) { return static_cast<Symbol>(n + mu * n + nu); };
  auto sorted = [](Symbol s, Symbol t) { return s <= t ? Word{s, t} : Word{t, s}; };

  // a^nu a^mu = a^mu a^nu - (i/k) delta^mu_0 a^nu   (mu < nu)
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = mu + 1; nu < n; ++nu) {
      Terms corr;
      if (mu == 0) add_term(corr, Word{A(nu)}, -il);
      data.swap_rules[{A(nu), A(mu)}] = corr;
    }
  // L^mu_nu a^al = a^al L^mu_nu - (i/k)((L^mu_0 - d^mu_0) L^al_nu + (L^0_nu - d^0_nu) g^{mu al})
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t al = 0; al < n; ++al) {
        Terms corr;
        add_term(corr, sorted(L(mu, 0), L(al, nu)), -il);
        if (mu == 0) add_term(corr, Word{L(al, nu)}, il);
        const int gma = g.g(mu, al);
        if (gma != 0) {
          add_term(corr, Word{L(0, nu)}, -il * Scalar(gma));
          if (nu == 0) add_term(corr, Word{}, il * Scalar(gma));
        }
        data.swap_rules[{L(mu, nu), A(al)}] = corr;
      }
  return data;
}

}  // namespace

PoincareAlgebra::PoincareAlgebra(Metric metric) : metric_(std::move(metric)) {
  const std::size_t n = metric_.dimension();
  if (n < 2) throw AlgebraError("kappa-Poincare group needs n >= 2");
  PresentationData data = poincare_rules(metric_);
  auto rules_only = std::make_shared<const Presentation>(data);
  const std::size_t total = n + n * n;
  data.counit.resize(total);
  data.antipode.resize(total);
  data.star.resize(total);
  data.coproduct.resize(total);
  auto L = [n](std::size_t mu, std::size_t nu) { return static_cast<Symbol>(n + mu * n + nu); };
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) {
      const Symbol s = L(mu, nu);
      data.counit[s] = Scalar(delta(mu, nu));
      data.antipode[s] = Terms{{Word{L(nu, mu)}, Scalar(metric_.diag(nu) * metric_.diag(mu))}};
      data.star[s] = Terms{{Word{s}, Scalar::one()}};
      TensorTerms cop;
      for (std::size_t al = 0; al < n; ++al)
        cop.emplace(std::vector<Word>{Word{L(mu, al)}, Word{L(al, nu)}}, Scalar::one());
      data.coproduct[s] = std::move(cop);
    }
  for (std::size_t mu = 0; mu < n; ++mu) {
    const auto s = static_cast<Symbol>(mu);
    data.counit[s] = Scalar();
    data.star[s] = Terms{{Word{s}, Scalar::one()}};
    // S(a^mu) = -S(L^mu_nu) a^nu
    Element anti(rules_only);
    for (std::size_t nu = 0; nu < n; ++nu)
      anti -= Element::generator(rules_only, L(nu, mu), Scalar(metric_.diag(nu) * metric_.diag(mu))) *
              Element::generator(rules_only, static_cast<Symbol>(nu));
    data.antipode[s] = anti.terms();
    TensorTerms cop;
    for (std::size_t nu = 0; nu < n; ++nu)
      cop.emplace(std::vector<Word>{Word{L(mu, nu)}, Word{static_cast<Symbol>(nu)}}, Scalar::one());
    cop.emplace(std::vector<Word>{Word{s}, Word{}}, Scalar::one());
    data.coproduct[s] = std::move(cop);
  }
  presentation_ = std::make_shared<const Presentation>(std::move(data));
}

Symbol PoincareAlgebra::a_symbol(std::size_t mu) const {
  if (mu >= dimension()) throw AlgebraError("index " + idx(mu) + " out of range for n=" + idx(dimension()));
  return static_cast<Symbol>(mu);
}

Symbol PoincareAlgebra::lambda_symbol(std::size_t mu, std::size_t nu) const {
  const std::size_t n = dimension();
  if (mu >= n || nu >= n)
    throw AlgebraError("index [" + idx(mu) + "," + idx(nu) + "] out of range for n=" + idx(n));
  return static_cast<Symbol>(n + mu * n + nu);
}

Element PoincareAlgebra::a(std::size_t mu) const { return Element::generator(presentation_, a_symbol(mu)); }

Element PoincareAlgebra::lambda(std::size_t mu, std::size_t nu) const {
  return Element::generator(presentation_, lambda_symbol(mu, nu));
}

Element PoincareAlgebra::lambda_lowered(std::size_t nu, std::size_t mu) const {
  return lambda(nu, mu) * Scalar(metric_.diag(nu) * metric_.diag(mu));
}

std::vector<Element> PoincareAlgebra::ortho_generators() const {
  const std::size_t n = dimension();
  std::vector<Element> out;
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = mu; nu < n; ++nu) {
      Element row = one() * Scalar(-metric_.g(mu, nu));
      Element col = one() * Scalar(-metric_.g(mu, nu));
      for (std::size_t al = 0; al < n; ++al) {
        row += lambda(mu, al) * lambda(nu, al) * Scalar(metric_.diag(al));
        col += lambda(al, mu) * lambda(al, nu) * Scalar(metric_.diag(al));
      }
      out.push_back(std::move(row));
      out.push_back(std::move(col));
    }
  return out;
}

std::vector<Relation> PoincareAlgebra::relations() const {
  const std::size_t n = dimension();
  std::vector<Relation> out;
  const Scalar il = Scalar::lambda(1, GaussianRational::i());
  auto w2 = [](Symbol s, Symbol t) { return Word{s, t}; };
  // [a^mu, a^nu] - (i/k)(d^mu_0 a^nu - d^nu_0 a^mu)
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = mu + 1; nu < n; ++nu) {
      const Symbol s = a_symbol(mu), t = a_symbol(nu);
      RawTerms raw{{w2(s, t), Scalar::one()}, {w2(t, s), Scalar(-1)}};
      if (mu == 0) raw.emplace_back(Word{t}, -il);
      out.push_back({"[a" + idx(mu) + ",a" + idx(nu) + "]", std::move(raw)});
    }
  // [L^mu_nu, a^al] + (i/k)((L^mu_0 - d^mu_0) L^al_nu + (L^0_nu - d^0_nu) g^{mu al})
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t al = 0; al < n; ++al) {
        const Symbol l = lambda_symbol(mu, nu), s = a_symbol(al);
        RawTerms raw{{w2(l, s), Scalar::one()}, {w2(s, l), Scalar(-1)}};
        raw.emplace_back(w2(lambda_symbol(mu, 0), lambda_symbol(al, nu)), il);
        if (mu == 0) raw.emplace_back(Word{lambda_symbol(al, nu)}, -il);
        const int gma = metric_.g(mu, al);
        if (gma != 0) {
          raw.emplace_back(Word{lambda_symbol(0, nu)}, il * Scalar(gma));
          if (nu == 0) raw.emplace_back(Word{}, -il * Scalar(gma));
        }
        out.push_back({"[L" + idx(mu) + idx(nu) + ",a" + idx(al) + "]", std::move(raw)});
      }
  // [L^mu_nu, L^al_be]
  const std::size_t nl = n * n;
  for (std::size_t p = 0; p < nl; ++p)
    for (std::size_t q = p + 1; q < nl; ++q) {
      const Symbol s = lambda_symbol(p / n, p % n), t = lambda_symbol(q / n, q % n);
      out.push_back({"[L" + idx(p / n) + idx(p % n) + ",L" + idx(q / n) + idx(q % n) + "]",
                     RawTerms{{w2(s, t), Scalar::one()}, {w2(t, s), Scalar(-1)}}});
    }
  return out;
}

// ---------------------------------------------------------------------------

OrthoIdeal::OrthoIdeal(const PoincareAlgebra& alg, std::size_t max_degree)
    : presentation_(alg.presentation()),
      n_(alg.dimension()),
      max_degree_(max_degree),
      generators_(alg.ortho_generators()) {
  if (max_degree_ < 2) return;
  const std::size_t nl = n_ * n_;
  for (const auto& o : generators_) {
    for (const Word& base : normal_words_upto(nl, max_degree_ - 2)) {
      Word m;
      for (Symbol s : base) m.push_back(static_cast<Symbol>(s + n_));
      span_.insert((o * Element(presentation_, Terms{{m, Scalar::one()}})).terms());
    }
  }
}

const Terms& OrthoIdeal::reduce_word(const Word& w) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  std::size_t split = 0;
  while (split < w.size() && w[split] < n_) ++split;
  const Word prefix = w.substr(0, split);
  Terms out;
  Terms lam{{w.substr(split), Scalar::one()}};
  for (const auto& [m, c] : span_.reduce(std::move(lam))) add_term(out, prefix + m, c);
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(w, std::move(out)).first->second;
}

Element OrthoIdeal::reduce(const Element& p) const {
  Terms out;
  for (const auto& [w, c] : p.terms())
    for (const auto& [u, cu] : reduce_word(w)) add_term(out, u, c * cu);
  return {p.algebra(), std::move(out)};
}

TensorElement OrthoIdeal::reduce_factor(const TensorElement& t, std::size_t k) const {
  return map_factor(t, k, [this](const Word& w) { return reduce_word(w); });
}

TensorElement OrthoIdeal::reduce_all(const TensorElement& t) const {
  TensorElement out = t;
  for (std::size_t k = 0; k < t.arity(); ++k)
    if (t.factors()[k] == presentation_ || t.factors()[k]->name() == presentation_->name())
      out = reduce_factor(out, k);
  return out;
}

}  // namespace kappa
