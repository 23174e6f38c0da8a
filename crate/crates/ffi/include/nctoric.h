#ifndef NCTORIC_H
#define NCTORIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum NctStatus {
  NCT_STATUS_OK = 0,
  NCT_STATUS_NULL_POINTER = 1,
  NCT_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed literal or JSON.
   */
  NCT_STATUS_INPUT_ERROR = 3,
  /**
   * Well-formed input the computation rejects.
   */
  NCT_STATUS_DOMAIN_ERROR = 4,
  NCT_STATUS_BUFFER_TOO_SMALL = 5,
  NCT_STATUS_PANIC = 6,
} NctStatus;

/**
 * A finite-dimensional unital algebra over `ℚ`.
 */
typedef struct NctAlgebra NctAlgebra;

/**
 * An LVM configuration.
 */
typedef struct NctConfiguration NctConfiguration;

/**
 * A simple polytope `{x : ⟨uᵢ, x⟩ ≥ λᵢ}`.
 */
typedef struct NctPolytope NctPolytope;

/**
 * An element of `ℚ` or `ℚ(√d)`.
 */
typedef struct NctScalar NctScalar;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null.
 *
 * The pointer stays valid until the next library call on this thread.
 */
const char *nct_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *nct_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void nct_string_free(char *s);

/**
 * Parses a literal such as `3/4`, `sqrt(2)` or `1/2+1/2*sqrt(5)`.
 *
 * # Safety
 * `literal` must be a nul-terminated string; `out` must be writable.
 */
enum NctStatus nct_scalar_parse(const char *literal, struct NctScalar **out);

/**
 * # Safety
 * `x` must be null or a handle from this library, freed once.
 */
void nct_scalar_free(struct NctScalar *x);

/**
 * # Safety
 * `x` must be a live handle; `out` must be writable.
 */
enum NctStatus nct_scalar_to_string(const struct NctScalar *x, char **out);

/**
 * Nearest `double`; for display only.
 *
 * # Safety
 * `x` must be a live handle; `out` must be writable.
 */
enum NctStatus nct_scalar_to_f64(const struct NctScalar *x, double *out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum NctStatus nct_scalar_add(const struct NctScalar *a,
                              const struct NctScalar *b,
                              struct NctScalar **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum NctStatus nct_scalar_mul(const struct NctScalar *a,
                              const struct NctScalar *b,
                              struct NctScalar **out);

/**
 * `a + b√d ↦ a − b√d`.
 *
 * # Safety
 * `x` must be a live handle; `out` must be writable.
 */
enum NctStatus nct_scalar_conjugate(const struct NctScalar *x, struct NctScalar **out);

/**
 * Reads `{"dim":n,"facets":[{"normal":[…],"offset":…},…]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum NctStatus nct_polytope_from_json(const char *json, struct NctPolytope **out);

/**
 * # Safety
 * `p` must be null or a handle from this library, freed once.
 */
void nct_polytope_free(struct NctPolytope *p);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum NctStatus nct_polytope_dim(const struct NctPolytope *p, size_t *out);

/**
 * Vertices, facet family, classification and face counts as JSON.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum NctStatus nct_polytope_info_json(const struct NctPolytope *p, char **out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum NctStatus nct_polytope_normal_fan_json(const struct NctPolytope *p, char **out);

/**
 * Reads `{"m":…,"lambdas":[[{"re":…,"im":…},…],…]}`, one row per `λᵢ ∈ ℂᵐ`.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum NctStatus nct_configuration_from_json(const char *json, struct NctConfiguration **out);

/**
 * # Safety
 * `c` must be null or a handle from this library, freed once.
 */
void nct_configuration_free(struct NctConfiguration *c);

/**
 * # Safety
 * `c` must be a live handle; `siegel` and `weak_hyperbolic` must be writable.
 */
enum NctStatus nct_configuration_check(const struct NctConfiguration *c,
                                       bool *siegel,
                                       bool *weak_hyperbolic);

/**
 * Condition (K) and whether the leaves are compact tori.
 *
 * # Safety
 * `c` must be a live handle; `condition_k` and `compact_leaves` must be writable.
 */
enum NctStatus nct_configuration_dichotomy(const struct NctConfiguration *c,
                                           bool *condition_k,
                                           bool *compact_leaves);

/**
 * Gale transform with all `εᵢ = 1`, as JSON.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum NctStatus nct_configuration_gale_json(const struct NctConfiguration *c, char **out);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum NctStatus nct_configuration_fiber_json(const struct NctConfiguration *c, char **out);

/**
 * Reads `{"dim":…,"unit":[…],"c":[[[…]]]}` with `e_i e_j = Σ_k c[i][j][k] e_k`.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum NctStatus nct_algebra_from_json(const char *json, struct NctAlgebra **out);

/**
 * One of `field`, `fields2`, `z2`, `dual`, `pair2`, `upper2`.
 *
 * # Safety
 * `name` must be a nul-terminated string; `out` must be writable.
 */
enum NctStatus nct_algebra_builtin(const char *name, struct NctAlgebra **out);

/**
 * # Safety
 * `a` must be null or a handle from this library, freed once.
 */
void nct_algebra_free(struct NctAlgebra *a);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum NctStatus nct_algebra_dim(const struct NctAlgebra *a, size_t *out);

/**
 * Writes `HH_0 … HH_{up_to}` into `ranks[0..=up_to]`. Needs `len > up_to`,
 * otherwise returns `BufferTooSmall` without computing.
 *
 * # Safety
 * `a` must be a live handle; `ranks` must point to `len` writable elements.
 */
enum NctStatus nct_algebra_hh_ranks(const struct NctAlgebra *a,
                                    size_t up_to,
                                    size_t *ranks,
                                    size_t len);

/**
 * Truncated periodic cyclic homology at order `n` as JSON.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum NctStatus nct_algebra_hp_json(const struct NctAlgebra *a, size_t n, size_t window, char **out);

/**
 * Hirzebruch–Jung expansion of a literal; `depth == 0` uses the default.
 *
 * # Safety
 * `value` must be a nul-terminated string; `out` must be writable.
 */
enum NctStatus nct_hj_expand_json(const char *value, size_t depth, char **out);

/**
 * Morita equivalence of two irrational quadratic parameters as JSON.
 *
 * # Safety
 * `theta1`, `theta2` must be nul-terminated strings; `out` must be writable.
 */
enum NctStatus nct_morita_json(const char *theta1, const char *theta2, char **out);

/**
 * h-vector, g-vector and the g-theorem necessity check as JSON.
 *
 * # Safety
 * `f` must point to `len` readable elements; `out` must be writable.
 */
enum NctStatus nct_gvec_json(const int64_t *f, size_t len, size_t d, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NCTORIC_H */
