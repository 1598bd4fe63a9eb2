/* C interface to the kappa-Minkowski / kappa-Poincare engine.
 *
 * Strings returned through char** are heap-allocated and must be released
 * with kappa_string_free. On failure the output pointer is left untouched
 * and kappa_last_error() describes the problem (per thread).
 */
#ifndef KAPPA_KAPPA_H
#define KAPPA_KAPPA_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define KAPPA_API __attribute__((visibility("default")))
#else
#define KAPPA_API
#endif

typedef enum kappa_status {
  KAPPA_OK = 0,
  KAPPA_ERR_ARGUMENT = 1, /* null pointer, bad n, bad metric, unknown suite */
  KAPPA_ERR_PARSE = 2,    /* expression syntax, unknown symbol, index out of range */
  KAPPA_ERR_ALGEBRA = 3,  /* operation undefined for the operands */
  KAPPA_ERR_INTERNAL = 4
} kappa_status;

typedef enum kappa_format { KAPPA_FORMAT_TEXT = 0, KAPPA_FORMAT_JSON = 1 } kappa_format;

/* Algebras M_kappa, P_kappa and the calculus for one dimension and metric. */
typedef struct kappa_context kappa_context;

/* metric may be NULL for "+-...-". */
KAPPA_API kappa_status kappa_context_create(int n, const char* metric, kappa_context** out);
KAPPA_API void kappa_context_destroy(kappa_context* ctx);
KAPPA_API int kappa_context_dimension(const kappa_context* ctx);

KAPPA_API const char* kappa_last_error(void);
KAPPA_API const char* kappa_status_string(kappa_status status);
KAPPA_API void kappa_string_free(char* s);

/* Normal form of an element or one-form. */
KAPPA_API kappa_status kappa_normalize(kappa_context* ctx, const char* expr, char** out);
/* a*b - b*a */
KAPPA_API kappa_status kappa_commutator(kappa_context* ctx, const char* a, const char* b, char** out);
/* d of an M_kappa element (a one-form) or of a one-form (a two-form). */
KAPPA_API kappa_status kappa_differential(kappa_context* ctx, const char* expr, char** out);
KAPPA_API kappa_status kappa_wedge(kappa_context* ctx, const char* a, const char* b, char** out);
/* Left coaction of P_kappa on an M_kappa element or a one-form. */
KAPPA_API kappa_status kappa_coact(kappa_context* ctx, const char* expr, char** out);

/* Runs "hopf-check", "calculus-check", "classify" or "full-suite". The report
 * is written to *report and the number of failing checks to *failures. */
KAPPA_API kappa_status kappa_run_suite(const char* suite, int n, const char* metric, int max_degree, uint64_t seed,
                                       kappa_format format, char** report, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* KAPPA_KAPPA_H */
