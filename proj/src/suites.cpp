#include "kappa/suites.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "kappa/calculus.hpp"
#include "kappa/coaction.hpp"
#include "kappa/hopf.hpp"
#include "kappa/ideal_lab.hpp"

namespace kappa {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hopf-check", "calculus-check", "classify", "full-suite"};
  return names;
}

SuiteParams resolve(SuiteParams p) {
  if (p.n < 2) throw std::invalid_argument("n must be at least 2");
  if (p.n > 10) throw std::invalid_argument("n must be at most 10 (indices are single digits)");
  if (p.max_degree < 1) throw std::invalid_argument("max-degree must be at least 1");
  if (p.metric.empty()) p.metric = "+" + std::string(p.n - 1, '-');
  const Metric g = Metric::parse(p.metric);
  if (g.dimension() != p.n)
    throw std::invalid_argument("metric '" + p.metric + "' has " + std::to_string(g.dimension()) +
                                " entries but n = " + std::to_string(p.n));
  return p;
}

namespace {

struct Setup {
  explicit Setup(const SuiteParams& p)
      : metric(Metric::parse(p.metric)),
        hopf_degree(std::min<std::size_t>(p.max_degree, p.n <= 3 ? 3 : 2)),
        ortho_degree(std::max<std::size_t>(4, 2 * hopf_degree)),
        samples(p.n <= 3 ? 50 : 10),
        coaction(MinkowskiAlgebra(metric), PoincareAlgebra(metric)),
        ortho(coaction.poincare(), ortho_degree) {}

  Metric metric;
  std::size_t hopf_degree;
  std::size_t ortho_degree;
  std::size_t samples;
  Coaction coaction;
  OrthoIdeal ortho;
};

void add_hopf(Report& r, const Setup& s, const SuiteParams& p) {
  r.append(verify_hopf_minkowski(s.coaction.minkowski(), p.max_degree), "hopf.minkowski.");
  r.append(verify_hopf_poincare(s.coaction.poincare(), s.ortho, s.hopf_degree), "hopf.poincare.");
}

void add_calculus(Report& r, const Setup& s, const SuiteParams& p) {
  const Calculus cal(s.coaction.minkowski());
  r.append(verify_calculus_suite(cal, s.coaction, s.ortho, p.max_degree, p.seed), "calculus.");
}

}  // namespace

Report run_suite(const std::string& name, const SuiteParams& params) {
  const SuiteParams p = resolve(params);
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + name + "'");
  const Setup s(p);
  Report r;
  r.suite = name;
  if (name == "hopf-check" || name == "full-suite") add_hopf(r, s, p);
  if (name == "calculus-check" || name == "full-suite") add_calculus(r, s, p);
  if (name == "classify" || name == "full-suite")
    r.append(verify_classification(s.coaction, s.ortho, p.max_degree), "classify.");
  if (name == "full-suite") {
    r.append(verify_coaction_suite(s.coaction, s.ortho, s.hopf_degree, p.seed, s.samples), "coaction.");
    r.append(verify_x_munu_covariance(s.coaction, s.ortho), "covariance.");
  }
  r.sort();
  return r;
}

std::string render_text(const Report& r, const SuiteParams& p) {
  std::ostringstream out;
  out << "suite: " << r.suite << "\n";
  out << "params: n=" << p.n << " metric=" << p.metric << " maxDegree=" << p.max_degree << " seed=" << p.seed << "\n";
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& c : r.checks) {
    out << status_name(c.status) << "  " << c.name << "  " << c.detail << "\n";
    if (c.status == Status::pass) ++passed;
    if (c.status == Status::fail) ++failed;
    if (c.status == Status::skipped) ++skipped;
  }
  out << "summary: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return out.str();
}

std::string render_json(const Report& r, const SuiteParams& p) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["params"] = {{"n", p.n}, {"metric", p.metric}, {"maxDegree", p.max_degree}, {"seed", p.seed}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  return j.dump(2) + "\n";
}

}  // namespace kappa
