#include "kappa/kappa.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "kappa/calculus.hpp"
#include "kappa/coaction.hpp"
#include "kappa/expr.hpp"
#include "kappa/suites.hpp"

struct kappa_context {
  kappa::SuiteParams params;
  std::unique_ptr<kappa::ExpressionContext> expr;
  std::unique_ptr<kappa::Coaction> coaction;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
kappa_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const kappa::ParseError& e) {
    last_error = e.what();
    return KAPPA_ERR_PARSE;
  } catch (const kappa::AlgebraError& e) {
    last_error = e.what();
    return KAPPA_ERR_ALGEBRA;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return KAPPA_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return KAPPA_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return KAPPA_ERR_INTERNAL;
  }
}

kappa_status emit(const std::string& s, char** out) {
  char* p = dup(s);
  if (!p) {
    last_error = "out of memory";
    return KAPPA_ERR_INTERNAL;
  }
  *out = p;
  return KAPPA_OK;
}

kappa_status missing(const char* what) {
  last_error = std::string("null argument: ") + what;
  return KAPPA_ERR_ARGUMENT;
}

std::string coacted_to_string(const kappa::Calculus& cal, const kappa::CoactedForm& f) {
  std::string out;
  for (std::size_t b = 0; b < f.size(); ++b) {
    if (f[b].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + f[b].to_string() + ")*" + cal.basis_name(b);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

extern "C" {

kappa_status kappa_context_create(int n, const char* metric, kappa_context** out) {
  if (!out) return missing("out");
  return guarded([&] {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    kappa::SuiteParams p;
    p.n = static_cast<std::size_t>(n);
    p.metric = metric ? metric : "";
    p = kappa::resolve(p);
    auto ctx = std::make_unique<kappa_context>();
    ctx->params = p;
    const kappa::Metric g = kappa::Metric::parse(p.metric);
    ctx->expr = std::make_unique<kappa::ExpressionContext>(g);
    ctx->coaction = std::make_unique<kappa::Coaction>(ctx->expr->minkowski(), ctx->expr->poincare());
    *out = ctx.release();
    return KAPPA_OK;
  });
}

void kappa_context_destroy(kappa_context* ctx) { delete ctx; }

int kappa_context_dimension(const kappa_context* ctx) { return ctx ? static_cast<int>(ctx->params.n) : 0; }

const char* kappa_last_error(void) { return last_error.c_str(); }

const char* kappa_status_string(kappa_status status) {
  switch (status) {
    case KAPPA_OK:
      return "ok";
    case KAPPA_ERR_ARGUMENT:
      return "invalid argument";
    case KAPPA_ERR_PARSE:
      return "parse error";
    case KAPPA_ERR_ALGEBRA:
      return "algebra error";
    case KAPPA_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void kappa_string_free(char* s) { std::free(s); }

kappa_status kappa_normalize(kappa_context* ctx, const char* expr, char** out) {
  if (!ctx || !expr || !out) return missing("ctx, expr or out");
  return guarded([&] { return emit(kappa::to_string(kappa::parse_expression(expr, *ctx->expr), *ctx->expr), out); });
}

kappa_status kappa_commutator(kappa_context* ctx, const char* a, const char* b, char** out) {
  if (!ctx || !a || !b || !out) return missing("ctx, a, b or out");
  return guarded([&] {
    const std::string ea(a), eb(b);
    const auto v = kappa::parse_expression("(" + ea + ")*(" + eb + ") - (" + eb + ")*(" + ea + ")", *ctx->expr);
    return emit(kappa::to_string(v, *ctx->expr), out);
  });
}

kappa_status kappa_differential(kappa_context* ctx, const char* expr, char** out) {
  if (!ctx || !expr || !out) return missing("ctx, expr or out");
  return guarded([&] {
    const auto& cal = ctx->expr->calculus();
    const auto v = kappa::parse_expression(expr, *ctx->expr);
    if (v.kind == kappa::Value::Kind::form) return emit(cal.to_string(cal.d1(*v.form)), out);
    return emit(cal.to_string(cal.d0(kappa::as_minkowski(v, *ctx->expr))), out);
  });
}

kappa_status kappa_wedge(kappa_context* ctx, const char* a, const char* b, char** out) {
  if (!ctx || !a || !b || !out) return missing("ctx, a, b or out");
  return guarded([&] {
    const auto& cal = ctx->expr->calculus();
    const auto fa = kappa::as_form(kappa::parse_expression(a, *ctx->expr), *ctx->expr);
    const auto fb = kappa::as_form(kappa::parse_expression(b, *ctx->expr), *ctx->expr);
    return emit(cal.to_string(cal.wedge(fa, fb)), out);
  });
}

kappa_status kappa_coact(kappa_context* ctx, const char* expr, char** out) {
  if (!ctx || !expr || !out) return missing("ctx, expr or out");
  return guarded([&] {
    const auto& cal = ctx->expr->calculus();
    const auto v = kappa::parse_expression(expr, *ctx->expr);
    if (v.kind == kappa::Value::Kind::form)
      return emit(coacted_to_string(cal, kappa::coact_form(cal, *ctx->coaction, *v.form)), out);
    return emit(ctx->coaction->rho_L(kappa::as_minkowski(v, *ctx->expr)).to_string(), out);
  });
}

kappa_status kappa_run_suite(const char* suite, int n, const char* metric, int max_degree, uint64_t seed,
                             kappa_format format, char** report, int* failures) {
  if (!suite || !report) return missing("suite or report");
  return guarded([&] {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (max_degree < 1) throw std::invalid_argument("max-degree must be at least 1");
    kappa::SuiteParams p;
    p.n = static_cast<std::size_t>(n);
    p.metric = metric ? metric : "";
    p.max_degree = static_cast<std::size_t>(max_degree);
    p.seed = seed;
    p = kappa::resolve(p);
    const kappa::Report r = kappa::run_suite(suite, p);
    if (failures) *failures = static_cast<int>(r.failures());
    return emit(format == KAPPA_FORMAT_JSON ? kappa::render_json(r, p) : kappa::render_text(r, p), report);
  });
}

}  // extern "C"
