#pragma once

// Per-check accumulation of exact / modulo-ideal / failing outcomes.

#include <optional>
#include <string>

#include "kappa/report.hpp"

namespace kappa::detail {

enum class Outcome { exact, modulo, fail };

inline Outcome exact(bool ok) { return ok ? Outcome::exact : Outcome::fail; }

struct Tally {
  std::size_t total = 0;
  std::size_t exact = 0;
  std::optional<std::string> failure;

  void record(Outcome o, const std::string& where, const std::string& detail = "") {
    ++total;
    if (o == Outcome::exact) ++exact;
    if (o == Outcome::fail && !failure) failure = detail.empty() ? where : where + ": " + detail;
  }

  void emit(Report& r, const std::string& name, const std::string& what) const {
    if (failure) {
      r.add(name, false, "fails at " + *failure);
      return;
    }
    std::string d = std::to_string(total) + " " + what;
    if (exact == total) {
      d += ", all exact";
    } else {
      d += ": " + std::to_string(exact) + " exact, " + std::to_string(total - exact) +
           " only modulo the orthogonality ideal";
    }
    r.add(name, true, d);
  }
};

}  // namespace kappa::detail
