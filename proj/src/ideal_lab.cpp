#include "kappa/ideal_lab.hpp"

#include <map>

#include "tally.hpp"

namespace kappa {

std::vector<Word> graded_basis(const MinkowskiAlgebra& alg, std::size_t degree) {
  return normal_words(alg.dimension(), degree);
}

std::vector<Element> x_munu_generators(const MinkowskiAlgebra& alg) {
  std::vector<Element> out;
  const std::size_t n = alg.dimension();
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) out.push_back(alg.x_munu(mu, nu));
  return out;
}

std::vector<Element> traceless_generators(const MinkowskiAlgebra& alg) {
  std::vector<Element> out;
  const std::size_t n = alg.dimension();
  const Scalar inv_n = Scalar::rational(1, static_cast<long>(n));
  const Element phi = alg.phi();
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      out.push_back(alg.x_munu(mu, nu) - phi * (inv_n * Scalar(alg.metric().g(mu, nu))));
  return out;
}

RowSpace right_ideal_span(const std::vector<Element>& gens, std::size_t max_degree) {
  return ideal_span(gens, IdealSide::right, max_degree);
}

std::size_t kernel_dimension(const MinkowskiAlgebra& alg, std::size_t max_degree) {
  return normal_words_upto(alg.dimension(), max_degree).size() - 1;
}

QuotientReport quotient_dimension(const MinkowskiAlgebra& alg, const std::vector<Element>& gens,
                                  std::size_t max_degree) {
  QuotientReport q;
  q.max_degree = max_degree;
  q.kernel_dim = kernel_dimension(alg, max_degree);
  const RowSpace span = right_ideal_span(gens, max_degree);
  q.ideal_dim = span.rank();
  q.quotient_dim = q.kernel_dim - q.ideal_dim;
  for (const Word& w : normal_words_upto(alg.dimension(), max_degree))
    if (!w.empty() && !span.is_pivot(w)) q.representatives.push_back(w);
  return q;
}

bool spans_quotient(const MinkowskiAlgebra& alg, const RowSpace& ideal, const std::vector<Element>& elements,
                    std::size_t max_degree) {
  RowSpace s = ideal;
  for (const auto& e : elements) s.insert(e.terms());
  return s.rank() == kernel_dimension(alg, max_degree);
}

std::vector<Element> coaction_arguments(const Coaction& c, const OrthoIdeal& ortho, const Element& r) {
  const auto& M = c.minkowski().presentation();
  const TensorElement lifted = ortho.reduce_factor(c.lift_rho_L(omega_univ(r)), 0);
  // (eps (x) id) of the M (x) M part in front of each Poincare word recovers v_p
  std::map<Word, Terms, GradedLess> args;
  for (const auto& [ws, cf] : lifted.terms()) {
    const Scalar e = counit_word(*M, ws[1]);
    if (!e.is_zero()) add_term(args[ws[0]], ws[2], cf * e);
  }
  std::vector<Element> out;
  for (auto& [p, t] : args)
    if (!t.empty()) out.emplace_back(M, std::move(t));
  return out;
}

ClosureResult covariant_closure(const Coaction& c, const OrthoIdeal& ortho, const std::vector<Element>& gens,
                                std::size_t max_degree, std::size_t max_iterations) {
  const auto& M = c.minkowski().presentation();
  ClosureResult res;
  res.generators = gens;
  // rows already pushed through the coaction
  RowSpace checked;
  while (res.iterations < max_iterations) {
    ++res.iterations;
    RowSpace span = right_ideal_span(res.generators, max_degree);
    bool grew = false;
    for (const auto& [pivot, row] : span.rows()) {
      if (checked.contains(row)) continue;
      checked.insert(row);
      for (Element& v : coaction_arguments(c, ortho, Element(M, row))) {
        if (span.contains(v.terms())) continue;
        span.insert(v.terms());
        res.generators.push_back(std::move(v));
        grew = true;
      }
    }
    if (!grew) {
      res.converged = true;
      break;
    }
  }
  return res;
}

bool star_antipode_in_ideal(const MinkowskiAlgebra& alg, std::size_t max_degree) {
  const auto gens = traceless_generators(alg);
  const RowSpace span = right_ideal_span(gens, max_degree);
  for (const auto& q : gens)
    if (!span.contains(star(antipode(q)).terms())) return false;
  return true;
}

namespace {

using detail::exact;
using detail::Tally;

std::string dims(const QuotientReport& q) {
  return "dim ker eps = " + std::to_string(q.kernel_dim) + ", dim R = " + std::to_string(q.ideal_dim) +
         ", quotient " + std::to_string(q.quotient_dim);
}

/// Degree-by-degree count of normal words missing from the span at the working truncation.
void record_triviality(Tally& t, const MinkowskiAlgebra& m, const RowSpace& span, std::size_t max_degree) {
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::size_t missing = 0;
    for (const Word& w : normal_words(m.dimension(), d))
      if (!span.contains(Terms{{w, Scalar::one()}})) ++missing;
    t.record(exact(missing == 0), "degree " + std::to_string(d), std::to_string(missing) + " monomials outside R");
  }
}

}  // namespace

Report verify_classification(const Coaction& c, const OrthoIdeal& ortho, std::size_t max_degree) {
  Report r;
  r.suite = "classify";
  const auto& m = c.minkowski();
  const std::size_t n = m.dimension();
  const auto traceless = traceless_generators(m);
  const std::string d_str = std::to_string(max_degree);

  {
    Element trace = m.zero();
    Tally sym, in_ker;
    for (std::size_t mu = 0; mu < n; ++mu) {
      trace += traceless[mu * n + mu] * Scalar(m.metric().g(mu, mu));
      for (std::size_t nu = 0; nu < n; ++nu) {
        const std::string where = "(" + std::to_string(mu) + "," + std::to_string(nu) + ")";
        sym.record(exact(traceless[mu * n + nu] == traceless[nu * n + mu]), where,
                   (traceless[mu * n + nu] - traceless[nu * n + mu]).to_string());
        in_ker.record(exact(counit(traceless[mu * n + nu]).is_zero()), where);
      }
    }
    r.add("traceless.trace", trace.is_zero(), "g_{mu nu} q^{mu nu} = " + trace.to_string());
    sym.emit(r, "traceless.symmetry", "index pairs");
    in_ker.emit(r, "traceless.counit", "index pairs");
  }

  {
    Tally dim;
    std::string detail;
    for (std::size_t d = 2; d <= std::max<std::size_t>(max_degree, 2); ++d) {
      const auto q = quotient_dimension(m, traceless, d);
      dim.record(exact(q.quotient_dim == n + 1), "degree " + std::to_string(d), dims(q));
      if (d == max_degree) detail = dims(q);
    }
    if (dim.failure) {
      r.add("quotient.traceless_dimension", false, "fails at " + *dim.failure);
    } else {
      r.add("quotient.traceless_dimension", true, "quotient dimension n+1 = " + std::to_string(n + 1) +
                                                      " at every degree 2.." + d_str + " (" + detail + ")");
    }
    std::vector<Element> xs;
    for (std::size_t mu = 0; mu < n; ++mu) xs.push_back(m.x(mu));
    const RowSpace span = right_ideal_span(traceless, max_degree);
    std::vector<Element> with_phi = xs;
    with_phi.push_back(m.phi());
    r.add("quotient.spanned_by_x_and_phi", spans_quotient(m, span, with_phi, max_degree),
          "classes of x^mu and phi span ker eps / R up to degree " + d_str);
    RowSpace lin = span;
    for (const auto& x : xs) lin.insert(x.terms());
    r.add("quotient.no_linear_elements", lin.rank() == span.rank() + n,
          "R up to degree " + d_str + " meets span{x^mu} trivially, so the lowest degree in R is 2");
  }

  {
    const auto cl = covariant_closure(c, ortho, traceless, max_degree);
    const std::size_t added = cl.generators.size() - traceless.size();
    r.add("closure.traceless_stable", cl.converged && added == 0,
          std::to_string(added) + " elements added by the covariant closure up to degree " + d_str);
  }
  {
    const auto cl = covariant_closure(c, ortho, x_munu_generators(m), max_degree);
    const std::size_t added = cl.generators.size() - n * n;
    r.add("closure.x_munu_stable", cl.converged && added == 0,
          std::to_string(added) + " elements added by the covariant closure up to degree " + d_str);
    Tally trivial;
    record_triviality(trivial, m, right_ideal_span(cl.generators, max_degree), max_degree);
    trivial.emit(r, "closure.x_munu_trivial", "degrees of ker eps inside R up to degree " + d_str);
    const auto q = quotient_dimension(m, cl.generators, max_degree);
    r.add("quotient.x_munu_closure_dimension", q.quotient_dim == 0, dims(q));
  }
  {
    // x^mu enters the ideal of all x^{mu nu} through products of degree three
    std::string entry;
    const auto gens = x_munu_generators(m);
    for (std::size_t mu = 0; mu < n; ++mu) {
      std::string at = "never";
      for (std::size_t d = 2; d <= max_degree; ++d)
        if (right_ideal_span(gens, d).contains(m.x(mu).terms())) {
          at = std::to_string(d);
          break;
        }
      entry += (mu ? ", x" : "x") + std::to_string(mu) + " at degree " + at;
    }
    r.add("closure.x_munu_entry", entry.find("never") == std::string::npos, entry);
  }
  {
    std::vector<std::pair<std::string, Element>> seeds;
    Element sum = m.zero();
    for (std::size_t mu = 0; mu < n; ++mu) {
      seeds.emplace_back("x" + std::to_string(mu), m.x(mu));
      sum += m.x(mu) * Scalar(static_cast<long>(mu + 1));
    }
    seeds.emplace_back(sum.to_string(), sum);
    Tally converged, trivial;
    for (const auto& [label, seed] : seeds) {
      const auto cl = covariant_closure(c, ortho, {seed}, max_degree);
      if (label == "x0") {
        const auto q = quotient_dimension(m, cl.generators, max_degree);
        r.add("quotient.x0_closure_dimension", q.quotient_dim == 0, dims(q));
      }
      converged.record(exact(cl.converged), label, std::to_string(cl.iterations) + " iterations");
      Tally t;
      record_triviality(t, m, right_ideal_span(cl.generators, max_degree), max_degree);
      trivial.record(t.failure ? detail::Outcome::fail : detail::Outcome::exact, label, t.failure.value_or(""));
    }
    converged.emit(r, "closure.linear_seed_converged", "degree-one seeds");
    trivial.emit(r, "closure.linear_seed_trivial", "degree-one seeds with trivial quotient up to degree " + d_str);
  }
  {
    const std::size_t d = std::min<std::size_t>(max_degree, 3);
    r.add("ideal.star_antipode", star_antipode_in_ideal(m, d),
          "star(S(q)) in R for every traceless generator q, degree " + std::to_string(d));
  }
  return r;
}

}  // namespace kappa
