#pragma once

#include <string>
#include <vector>

namespace kappa {

enum class Status { pass, fail, skipped };

const char* status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(detail)});
  }
  void skip(std::string name, std::string detail) {
    checks.push_back({std::move(name), Status::skipped, std::move(detail)});
  }
  /// Appends the checks of another report, prefixing their names.
  void append(const Report& other, const std::string& prefix = "");
  bool ok() const;
  std::size_t failures() const;
  /// Checks ordered by name (stable for equal names).
  void sort();
};

}  // namespace kappa
