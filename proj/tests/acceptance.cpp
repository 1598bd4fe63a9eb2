// Acceptance criteria, one PASS/FAIL line each.
//
//   acceptance [criterion...] [--cli PATH]
//
// With no criteria all nine run. Exit status is 0 iff every selected criterion passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "kappa/calculus.hpp"
#include "kappa/coaction.hpp"
#include "kappa/hopf.hpp"
#include "kappa/ideal_lab.hpp"
#include "kappa/suites.hpp"

using namespace kappa;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

std::string cli_path = "kappa";

class Collector {
 public:
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok_ = false;
      if (failures_.size() < 4) failures_.push_back(what);
    }
  }
  // every check of the report must pass
  void report(const Report& r, const std::string& where) {
    for (const auto& c : r.checks) require(c.status == Status::pass, where + " " + c.name + ": " + c.detail);
  }
  Verdict verdict(const std::string& summary) const {
    if (ok_) return {true, summary};
    std::string d = summary;
    for (const auto& f : failures_) d += "; " + f;
    return {false, d};
  }

 private:
  bool ok_ = true;
  std::vector<std::string> failures_;
};

struct Setup {
  explicit Setup(std::size_t n)
      : metric(Metric::standard(n)), coaction(MinkowskiAlgebra(metric), PoincareAlgebra(metric)) {}
  Metric metric;
  Coaction coaction;
};

// Minkowski Hopf laws, exact, degree <= 3.
Verdict criterion1() {
  Collector c;
  for (std::size_t n : {2, 3, 4}) c.report(verify_hopf_minkowski(MinkowskiAlgebra(Metric::standard(n)), 3), "n=" + std::to_string(n));
  return c.verdict("coassociativity, counit, antipode and star laws exact on all monomials of degree <= 3, n = 2, 3, 4");
}

// Poincare: Delta and eps of every relation exactly zero; antipode law modulo orthogonality, truncation 4.
Verdict criterion2() {
  Collector c;
  std::size_t total = 0, exact_cop = 0, exact_eps = 0, modulo_cop = 0;
  for (std::size_t n : {2, 3}) {
    const PoincareAlgebra P(Metric::standard(n));
    const OrthoIdeal J(P, 4);
    const auto& p = P.presentation();
    for (const auto& rel : P.relations()) {
      ++total;
      const TensorElement d = coproduct_raw(p, rel.raw);
      const bool cop = d.is_zero();
      modulo_cop += !cop && J.reduce_all(d).is_zero();
      const bool eps = counit_raw(*p, rel.raw).is_zero();
      exact_cop += cop;
      exact_eps += eps;
      c.require(cop, "n=" + std::to_string(n) + " Delta" + rel.label + " is not exactly zero");
      c.require(eps, "n=" + std::to_string(n) + " eps" + rel.label + " is not zero");
    }
    const Report r = verify_hopf_poincare(P, J, 2);
    for (const auto& ch : r.checks)
      if (ch.name.rfind("antipode.", 0) == 0)
        c.require(ch.status == Status::pass, "n=" + std::to_string(n) + " " + ch.name + ": " + ch.detail);
  }
  return c.verdict("Delta exact on " + std::to_string(exact_cop) + "/" + std::to_string(total) + " relations (" +
                   std::to_string(modulo_cop) + " more vanish only modulo orthogonality), eps exact on " +
                   std::to_string(exact_eps) + "/" + std::to_string(total) +
                   ", antipode law modulo orthogonality at truncation 4, n = 2, 3");
}

// Coaction axioms, D-compatibility, lift properties on 50 random elements, projection identities.
Verdict criterion3() {
  Collector c;
  for (std::size_t n : {2, 3}) {
    const Setup s(n);
    const OrthoIdeal J(s.coaction.poincare(), 6);
    c.report(verify_coaction_suite(s.coaction, J, 3, default_seed, 50), "n=" + std::to_string(n));
  }
  return c.verdict("coaction suite at degree 3 with 50 random bimodule elements, n = 2, 3");
}

// Covariance of omega(x^{mu nu}) and invariance of omega(phi), modulo orthogonality.
Verdict criterion4() {
  Collector c;
  for (std::size_t n : {2, 3}) {
    const Setup s(n);
    c.report(verify_x_munu_covariance(s.coaction, OrthoIdeal(s.coaction.poincare(), 4)), "n=" + std::to_string(n));
  }
  return c.verdict("all (mu, nu) and the trace element at the universal level, n = 2, 3");
}

// Calculus consistency, all exact.
Verdict criterion5() {
  Collector c;
  for (std::size_t n : {2, 3, 4}) {
    const Setup s(n);
    const Calculus cal(s.coaction.minkowski());
    const Report r = verify_calculus_suite(cal, s.coaction, OrthoIdeal(s.coaction.poincare(), 4), 4, default_seed);
    c.report(r, "n=" + std::to_string(n));
    for (const char* name : {"bimodule.consistency", "d.relations", "d.nilpotency", "coact.sigma_covariance",
                             "star.rules", "star.involution", "star.d_hermitian"}) {
      bool found = false;
      for (const auto& ch : r.checks)
        if (ch.name == name) {
          found = true;
          c.require(ch.detail.find("only modulo") == std::string::npos, std::string(name) + " not exact: " + ch.detail);
        }
      c.require(found, std::string("missing check ") + name);
    }
  }
  return c.verdict("bimodule consistency, d on relations, d o d = 0 to degree 4, sigma covariance, star rules, n = 2, 3, 4");
}

// Quotient dimensions at truncation 4.
Verdict criterion6() {
  Collector c;
  std::ostringstream dims;
  for (std::size_t n : {2, 3, 4}) {
    const Setup s(n);
    const auto& m = s.coaction.minkowski();
    const OrthoIdeal J(s.coaction.poincare(), 4);
    const QuotientReport tl = quotient_dimension(m, traceless_generators(m), 4);
    c.require(tl.quotient_dim == n + 1, "traceless quotient " + std::to_string(tl.quotient_dim) + " at n=" + std::to_string(n));
    std::vector<Element> basis;
    for (std::size_t mu = 0; mu < n; ++mu) basis.push_back(m.x(mu));
    basis.push_back(m.phi());
    c.require(spans_quotient(m, right_ideal_span(traceless_generators(m), 4), basis, 4), "x^mu, phi do not span");
    const auto seed = covariant_closure(s.coaction, J, {m.x(0)}, 4);
    const std::size_t seed_dim = quotient_dimension(m, seed.generators, 4).quotient_dim;
    c.require(seed.converged && seed_dim == 0, "closure of x0 leaves quotient " + std::to_string(seed_dim));
    const auto full = covariant_closure(s.coaction, J, x_munu_generators(m), 4);
    const std::size_t full_dim = quotient_dimension(m, full.generators, 4).quotient_dim;
    c.require(full.converged && full_dim == 0, "closure of x^{mu nu} leaves quotient " + std::to_string(full_dim));
    c.report(verify_classification(s.coaction, J, 4), "n=" + std::to_string(n));
    dims << (n == 2 ? "" : ", ") << "n=" << n << ": {" << tl.quotient_dim << ", " << seed_dim << ", " << full_dim << "}";
  }
  return c.verdict("quotient dimensions {traceless, seed x0, full tensor} " + dims.str());
}

// star(S(q)) in the traceless right ideal at truncation 3.
Verdict criterion7() {
  Collector c;
  for (std::size_t n : {2, 3, 4})
    c.require(star_antipode_in_ideal(MinkowskiAlgebra(Metric::standard(n)), 3), "fails at n=" + std::to_string(n));
  return c.verdict("every traceless generator q has star(S(q)) in R at degree 3, n = 2, 3, 4");
}

// d(tau) = 0 and d(t^mu) = 0, with the printed-formula note.
Verdict criterion8() {
  Collector c;
  std::string note;
  for (std::size_t n : {2, 3, 4}) {
    const Setup s(n);
    const Calculus cal(s.coaction.minkowski());
    c.require(cal.d1_tau().is_zero(), "d(tau) = " + cal.to_string(cal.d1_tau()));
    c.require(cal.d1(cal.basis(cal.tau_index())).is_zero(), "d1(tau) nonzero");
    for (std::size_t mu = 0; mu < n; ++mu) c.require(cal.d1(cal.basis(mu)).is_zero(), "d(t^mu) nonzero");
    const Report r = verify_calculus_suite(cal, s.coaction, OrthoIdeal(s.coaction.poincare(), 4), 2, default_seed, 10);
    for (const auto& ch : r.checks)
      if (ch.name == "d.tau") {
        c.require(ch.status == Status::pass, "d.tau check: " + ch.detail);
        note = ch.detail;
      }
  }
  c.require(!note.empty(), "no d.tau check reported");
  return c.verdict("d(tau) = 0 and d(t^mu) = 0 for n = 2, 3, 4; note: " + note);
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

// Two CLI runs of full-suite with the same seed give byte-identical JSON.
Verdict criterion9() {
  Collector c;
  const std::string cmd = "'" + cli_path + "' full-suite --n 3 --seed 12345 --format json";
  int s1 = 0, s2 = 0;
  const std::string a = run_capture(cmd, s1);
  const std::string b = run_capture(cmd, s2);
  c.require(s1 == 0 && s2 == 0, "exit status " + std::to_string(s1) + ", " + std::to_string(s2));
  c.require(!a.empty(), "empty report");
  c.require(a == b, "reports differ");
  return c.verdict("two runs of `full-suite --n 3 --seed 12345 --format json`, " + std::to_string(a.size()) +
                   " bytes each, identical");
}

struct Criterion {
  const char* title;
  std::function<Verdict()> run;
  double budget_s;  // 0 means unbounded
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"Minkowski Hopf laws", criterion1, 60},
      {"Poincare Hopf laws", criterion2, 120},
      {"coaction suite", criterion3, 0},
      {"covariance of the quadratic tensor", criterion4, 0},
      {"calculus consistency", criterion5, 0},
      {"classification", criterion6, 300},
      {"star of antipode in R", criterion7, 0},
      {"d(tau)", criterion8, 0},
      {"determinism", criterion9, 0},
  };

  std::vector<std::size_t> selected;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--cli" && k + 1 < argc) {
      cli_path = argv[++k];
      continue;
    }
    std::size_t idx = 0;
    try {
      idx = std::stoul(arg);
    } catch (const std::exception&) {
      idx = 0;
    }
    if (idx < 1 || idx > criteria.size()) {
      std::cerr << "usage: acceptance [1-" << criteria.size() << "]... [--cli PATH]\n";
      return 2;
    }
    selected.push_back(idx);
  }
  if (selected.empty())
    for (std::size_t k = 1; k <= criteria.size(); ++k) selected.push_back(k);

  bool all = true;
  for (std::size_t idx : selected) {
    const Criterion& cr = criteria[idx - 1];
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = cr.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_s > 0 && secs > cr.budget_s) {
      v.ok = false;
      v.detail += "; exceeded " + std::to_string(static_cast<int>(cr.budget_s)) + " s";
    }
    char t[32];
    std::snprintf(t, sizeof t, "%.1f s", secs);
    std::cout << (v.ok ? "PASS" : "FAIL") << "  criterion " << idx << "  " << cr.title << "  (" << t << ")  " << v.detail
              << std::endl;
    all = all && v.ok;
  }
  return all ? 0 : 1;
}
