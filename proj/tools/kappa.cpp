// kappa: command-line front-end over the C API.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "kappa/kappa.h"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct Options {
  int n = 4;
  std::string metric;
  int max_degree = 4;
  std::string format = "text";
  std::uint64_t seed = 12345;
  std::vector<std::string> exprs;
};

int report_error(kappa_status st) {
  std::cerr << "kappa: " << kappa_status_string(st) << ": " << kappa_last_error() << "\n";
  return st == KAPPA_ERR_INTERNAL ? exit_failure : exit_usage;
}

using Unary = kappa_status (*)(kappa_context*, const char*, char**);
using Binary = kappa_status (*)(kappa_context*, const char*, const char*, char**);

int with_context(const Options& o, const auto& body) {
  kappa_context* ctx = nullptr;
  const kappa_status st = kappa_context_create(o.n, o.metric.empty() ? nullptr : o.metric.c_str(), &ctx);
  if (st != KAPPA_OK) return report_error(st);
  const int rc = body(ctx);
  kappa_context_destroy(ctx);
  return rc;
}

int print_result(kappa_status st, char* out) {
  if (st != KAPPA_OK) return report_error(st);
  std::cout << out << "\n";
  kappa_string_free(out);
  return exit_pass;
}

int run_unary(const Options& o, Unary f) {
  return with_context(o, [&](kappa_context* ctx) {
    char* out = nullptr;
    const kappa_status st = f(ctx, o.exprs.at(0).c_str(), &out);
    return print_result(st, out);
  });
}

int run_binary(const Options& o, Binary f) {
  return with_context(o, [&](kappa_context* ctx) {
    char* out = nullptr;
    const kappa_status st = f(ctx, o.exprs.at(0).c_str(), o.exprs.at(1).c_str(), &out);
    return print_result(st, out);
  });
}

int run_suite(const std::string& name, const Options& o) {
  char* report = nullptr;
  int failures = 0;
  const kappa_status st =
      kappa_run_suite(name.c_str(), o.n, o.metric.empty() ? nullptr : o.metric.c_str(), o.max_degree, o.seed,
                      o.format == "json" ? KAPPA_FORMAT_JSON : KAPPA_FORMAT_TEXT, &report, &failures);
  if (st != KAPPA_OK) return report_error(st);
  std::fputs(report, stdout);
  kappa_string_free(report);
  return failures == 0 ? exit_pass : exit_failure;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "spacetime dimension")->check(CLI::Range(2, 10))->capture_default_str();
  sub->add_option("--metric", o.metric, "signature string such as +--- (default + followed by n-1 -)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra of kappa-Minkowski space, kappa-Poincare and the covariant calculus"};
  app.require_subcommand(1);
  Options o;

  struct ExprVerb {
    const char* name;
    const char* help;
    int arity;
  };
  const std::vector<ExprVerb> expr_verbs{
      {"normalize", "normal form of an element or one-form", 1},
      {"comm", "commutator a*b - b*a", 2},
      {"d", "exterior derivative of an element or one-form", 1},
      {"wedge", "wedge product of two one-forms", 2},
      {"coact", "left coaction of P_kappa on an element or one-form", 1},
  };
  for (const auto& v : expr_verbs) {
    auto* sub = app.add_subcommand(v.name, v.help);
    add_common(sub, o);
    sub->add_option("expr", o.exprs, v.arity == 1 ? "expression" : "two expressions")->required()->expected(v.arity);
  }

  for (const char* name : {"hopf-check", "calculus-check", "classify", "full-suite"}) {
    auto* sub = app.add_subcommand(name, std::string("run the ") + name + " suite");
    add_common(sub, o);
    sub->add_option("--max-degree", o.max_degree, "truncation degree")->check(CLI::Range(1, 12))->capture_default_str();
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    sub->add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  if (verb == "normalize") return run_unary(o, kappa_normalize);
  if (verb == "comm") return run_binary(o, kappa_commutator);
  if (verb == "d") return run_unary(o, kappa_differential);
  if (verb == "wedge") return run_binary(o, kappa_wedge);
  if (verb == "coact") return run_unary(o, kappa_coact);
  return run_suite(verb, o);
}
