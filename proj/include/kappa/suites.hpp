#pragma once

// Named verification suites and their text / JSON reports.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kappa/report.hpp"

namespace kappa {

struct SuiteParams {
  std::size_t n = 4;
  /// Empty means "+" followed by n-1 "-".
  std::string metric;
  std::size_t max_degree = 4;
  std::uint64_t seed = 12345;
};

inline constexpr std::uint64_t default_seed = 12345;

/// "hopf-check", "calculus-check", "classify", "full-suite".
const std::vector<std::string>& suite_names();

/// Fills in the default metric and validates. Throws std::invalid_argument.
SuiteParams resolve(SuiteParams p);

/// Runs a named suite; checks are sorted by name. Throws std::invalid_argument
/// for unknown suites or invalid parameters.
///
/// Degrees used: Minkowski Hopf laws, the calculus and the ideal lab run at
/// max_degree. The Poincare Hopf laws and the coaction run at min(max_degree, 3)
/// for n <= 3 and min(max_degree, 2) above, with the orthogonality ideal
/// truncated at twice that (at least 4); the coaction samples 50 random
/// bimodule elements for n <= 3 and 10 above.
Report run_suite(const std::string& name, const SuiteParams& p);

std::string render_text(const Report& r, const SuiteParams& p);
std::string render_json(const Report& r, const SuiteParams& p);

}  // namespace kappa
