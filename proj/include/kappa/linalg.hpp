#pragma once

// Exact row echelon spaces over the Laurent scalar ring, used for truncated
// ideal membership and quotient dimensions.

#include <cstddef>
#include <map>
#include <vector>

#include "kappa/engine.hpp"

namespace kappa {

/// Echelon basis keyed by pivot word (the largest word of each row in the
/// graded order). Pivots that are units of the Laurent ring are scaled to 1 so
/// elimination stays exact; any other pivot is eliminated fraction-free by
/// cross-multiplication.
class RowSpace {
 public:
  /// Adds the row if independent of the current span. Returns true if added.
  bool insert(const Terms& row);

  /// Remainder after eliminating every pivot word, scanning from the top.
  /// Zero iff row is in the span. With non-unit pivots the remainder is
  /// only determined up to a nonzero scalar multiple.
  Terms reduce(Terms row) const;
  bool contains(const Terms& row) const { return reduce(row).empty(); }

  std::size_t rank() const { return rows_.size(); }
  const std::map<Word, Terms, GradedLess>& rows() const { return rows_; }
  bool is_pivot(const Word& w) const { return rows_.count(w) > 0; }

 private:
  std::map<Word, Terms, GradedLess> rows_;
};

/// All normal words (nondecreasing symbol sequences) of exactly `degree`.
std::vector<Word> normal_words(std::size_t generators, std::size_t degree);
/// All normal words of degree <= max_degree, graded order.
std::vector<Word> normal_words_upto(std::size_t generators, std::size_t max_degree);

enum class IdealSide { left, right, two_sided };

/// Span of {g*m} (right), {m*g} (left) or {m1*g*m2} over normal words m with
/// total degree <= max_degree.
RowSpace ideal_span(const std::vector<Element>& gens, IdealSide side, std::size_t max_degree);

/// True iff target lies in the degree-truncated ideal span. A false answer
/// only means no certificate exists within the truncation.
bool ideal_membership(const Element& target, const std::vector<Element>& gens, IdealSide side,
                      std::size_t max_degree);

}  // namespace kappa
