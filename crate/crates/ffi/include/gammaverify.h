#ifndef GAMMAVERIFY_H
#define GAMMAVERIFY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every fallible entry point.
 */
typedef enum GvStatus {
  GV_STATUS_OK = 0,
  GV_STATUS_NULL_POINTER = 1,
  GV_STATUS_INVALID_UTF8 = 2,
  GV_STATUS_UNKNOWN_ID = 3,
  GV_STATUS_DOMAIN = 4,
  GV_STATUS_NUMERIC = 5,
  GV_STATUS_MISUSE = 6,
  GV_STATUS_PANIC = 7,
} GvStatus;

/**
 * Tolerance selection; `PerIdentity` keeps each record's own class.
 */
typedef enum GvTolClass {
  GV_TOL_CLASS_PER_IDENTITY = -1,
  GV_TOL_CLASS_STRICT = 0,
  GV_TOL_CLASS_STANDARD = 1,
  GV_TOL_CLASS_SLOW = 2,
} GvTolClass;

/**
 * Verdict status of an identity check.
 */
typedef enum GvVerdictStatus {
  GV_VERDICT_STATUS_CONFIRMED = 0,
  GV_VERDICT_STATUS_REFUTED = 1,
  GV_VERDICT_STATUS_INCONCLUSIVE = 2,
} GvVerdictStatus;

/**
 * Opaque identity registry.
 */
typedef struct GvRegistry GvRegistry;

/**
 * Opaque verdict.
 */
typedef struct GvVerdict GvVerdict;

/**
 * A value with its absolute error estimate.
 */
typedef struct GvValue {
  double value;
  double abs_err;
} GvValue;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *gv_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *gv_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void gv_string_free(char *s);

/**
 * Evaluates a named special function, e.g. `"lambda"` or `"hurwitz-zeta"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string, `params` must point to
 * `n_params` doubles (or be null when `n_params` is 0), and `out` must be
 * writable.
 */
enum GvStatus gv_eval_fn(const char *name,
                         const double *params,
                         uintptr_t n_params,
                         struct GvValue *out);

/**
 * Sums a catalog series by id (`S-*`, `FS-*` or `PS-*`).
 *
 * # Safety
 * Same contract as `gv_eval_fn`.
 */
enum GvStatus gv_eval_series(const char *id,
                             const double *params,
                             uintptr_t n_params,
                             uint64_t max_terms,
                             struct GvValue *out);

/**
 * Evaluates a catalog integral by id (`Q-*`).
 *
 * # Safety
 * Same contract as `gv_eval_fn`.
 */
enum GvStatus gv_eval_integral(const char *id,
                               const double *params,
                               uintptr_t n_params,
                               struct GvValue *out);

/**
 * Creates a handle on the built-in identity catalog.
 */
struct GvRegistry *gv_registry_new(void);

/**
 * Releases a registry handle. Null is ignored.
 *
 * # Safety
 * `reg` must come from `gv_registry_new` and not have been freed.
 */
void gv_registry_free(struct GvRegistry *reg);

/**
 * Number of identities in the registry; 0 for a null handle.
 *
 * # Safety
 * `reg` must be null or a live registry handle.
 */
uintptr_t gv_registry_len(const struct GvRegistry *reg);

/**
 * Id of the identity at `index`, or null when out of range. The string
 * is owned by the registry.
 *
 * # Safety
 * `reg` must be null or a live registry handle.
 */
const char *gv_registry_id(const struct GvRegistry *reg, uintptr_t index);

/**
 * Checks one identity. Pass `n_params` 0 to use the record's first
 * default parameter set.
 *
 * # Safety
 * `reg` must be a live registry handle, `id` a NUL-terminated string,
 * `params` valid for `n_params` doubles and `out` writable.
 */
enum GvStatus gv_verify(const struct GvRegistry *reg,
                        const char *id,
                        const double *params,
                        uintptr_t n_params,
                        enum GvTolClass tol,
                        struct GvVerdict **out);

/**
 * Re-evaluates a DISPUTED identity with both routes and convergence
 * diagnostics.
 *
 * # Safety
 * Same contract as `gv_verify`.
 */
enum GvStatus gv_adjudicate(const struct GvRegistry *reg, const char *id, struct GvVerdict **out);

/**
 * Releases a verdict. Null is ignored.
 *
 * # Safety
 * `v` must come from `gv_verify` or `gv_adjudicate` and not have been freed.
 */
void gv_verdict_free(struct GvVerdict *v);

/**
 * Identity id of a verdict, owned by the verdict.
 *
 * # Safety
 * `v` must be a live verdict handle.
 */
const char *gv_verdict_id(const struct GvVerdict *v);

/**
 * Status of a verdict; `Inconclusive` for a null handle.
 *
 * # Safety
 * `v` must be null or a live verdict handle.
 */
enum GvVerdictStatus gv_verdict_status(const struct GvVerdict *v);

/**
 * Both side values and the residual/budget pair. Fails with `Numeric`
 * when a route did not produce a value; the note is then in
 * `gv_last_error`.
 *
 * # Safety
 * `v` must be a live verdict handle; the output pointers must be writable.
 */
enum GvStatus gv_verdict_sides(const struct GvVerdict *v,
                               struct GvValue *lhs,
                               struct GvValue *rhs,
                               double *residual,
                               double *budget);

/**
 * The verdict as a JSON object. Free with `gv_string_free`.
 *
 * # Safety
 * `v` must be null or a live verdict handle.
 */
char *gv_verdict_json(const struct GvVerdict *v);

/**
 * Runs the full catalog and writes the JSON report to `*out` (free with
 * `gv_string_free`). `parallelism` 0 means one thread; `timing` 0 drops
 * wall times so the output is reproducible.
 *
 * # Safety
 * `reg` must be a live registry handle and `out` writable.
 */
enum GvStatus gv_run_all_json(const struct GvRegistry *reg,
                              enum GvTolClass tol,
                              uintptr_t parallelism,
                              int32_t timing,
                              char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GAMMAVERIFY_H */
