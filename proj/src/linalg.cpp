#include "kappa/linalg.hpp"

#include <iterator>

namespace kappa {

namespace {

void axpy(Terms& row, const Scalar& f, const Terms& basis) {
  for (const auto& [w, c] : basis) add_term(row, w, f * c);
}

void scale(Terms& row, const Scalar& f) {
  for (auto& [w, c] : row) c *= f;
}

}  // namespace

Terms RowSpace::reduce(Terms row) const {
  Terms rest;
  while (!row.empty()) {
    auto top = std::prev(row.end());
    auto piv = rows_.find(top->first);
    if (piv == rows_.end()) {
      rest.emplace_hint(rest.begin(), top->first, top->second);
      row.erase(top);
      continue;
    }
    const Scalar& p = piv->second.rbegin()->second;
    Scalar f = top->second;
    if (p.is_one()) {
      axpy(row, -f, piv->second);
    } else if (p.is_unit()) {
      axpy(row, -(f * p.unit_inverse()), piv->second);
    } else {
      scale(row, p);
      scale(rest, p);
      axpy(row, -f, piv->second);
    }
  }
  return rest;
}

bool RowSpace::insert(const Terms& row) {
  Terms r = reduce(row);
  if (r.empty()) return false;
  const Scalar lead = r.rbegin()->second;
  if (lead.is_unit() && !lead.is_one()) scale(r, lead.unit_inverse());
  Word pivot = r.rbegin()->first;
  rows_.emplace(std::move(pivot), std::move(r));
  return true;
}

std::vector<Word> normal_words(std::size_t generators, std::size_t degree) {
  std::vector<Word> out;
  if (degree == 0) {
    out.emplace_back();
    return out;
  }
  if (generators == 0) return out;
  Word w(degree, 0);
  while (true) {
    out.push_back(w);
    // next nondecreasing sequence
    std::size_t k = degree;
    while (k > 0 && w[k - 1] == generators - 1) --k;
    if (k == 0) break;
    Symbol v = static_cast<Symbol>(w[k - 1] + 1);
    for (std::size_t j = k - 1; j < degree; ++j) w[j] = v;
  }
  return out;
}

std::vector<Word> normal_words_upto(std::size_t generators, std::size_t max_degree) {
  std::vector<Word> out;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    auto ws = normal_words(generators, d);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

RowSpace ideal_span(const std::vector<Element>& gens, IdealSide side, std::size_t max_degree) {
  RowSpace space;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const auto& alg = g.algebra();
    const std::size_t dg = g.degree();
    if (dg > max_degree) continue;
    const std::size_t room = max_degree - dg;
    const auto words = normal_words_upto(alg->size(), room);
    auto word_elem = [&](const Word& w) { return Element(alg, Terms{{w, Scalar::one()}}); };
    switch (side) {
      case IdealSide::right:
        for (const auto& m : words) space.insert((g * word_elem(m)).terms());
        break;
      case IdealSide::left:
        for (const auto& m : words) space.insert((word_elem(m) * g).terms());
        break;
      case IdealSide::two_sided:
        for (const auto& m1 : words) {
          Element left = word_elem(m1) * g;
          for (const auto& m2 : words) {
            if (m1.size() + m2.size() > room) continue;
            space.insert((left * word_elem(m2)).terms());
          }
        }
        break;
    }
  }
  return space;
}

bool ideal_membership(const Element& target, const std::vector<Element>& gens, IdealSide side,
                      std::size_t max_degree) {
  if (target.is_zero()) return true;
  return ideal_span(gens, side, max_degree).contains(target.terms());
}

}  // namespace kappa
