#ifndef SZLENK_CALC_H
#define SZLENK_CALC_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SzStatus {
  SZ_STATUS_OK = 0,
  SZ_STATUS_PARSE = 1,
  SZ_STATUS_OVERFLOW = 2,
  SZ_STATUS_DIVISION_BY_ZERO = 3,
  SZ_STATUS_NOT_A_LIMIT = 4,
  SZ_STATUS_DOMAIN = 5,
  SZ_STATUS_PRECONDITION_VIOLATED = 6,
  SZ_STATUS_SIZE_BOUND = 7,
  SZ_STATUS_INVARIANT_VIOLATION = 8,
  SZ_STATUS_NOT_MEMBER = 9,
  SZ_STATUS_NOT_MAXIMAL = 10,
  SZ_STATUS_MIXED_EPSILON = 11,
  SZ_STATUS_NULL_POINTER = 12,
  SZ_STATUS_INVALID_UTF8 = 13,
  SZ_STATUS_PANIC = 14,
} SzStatus;

/**
 * An ordinal below ε₀.
 */
typedef struct SzOrdinal SzOrdinal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an ordinal expression into a new handle.
 *
 * # Safety
 * `src` must be a valid C string and `out` a writable pointer.
 */
enum SzStatus sz_ordinal_parse(const char *src, struct SzOrdinal **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `o` must come from this library and not be used afterwards.
 */
void sz_ordinal_free(struct SzOrdinal *o);

/**
 * Canonical ASCII rendering.
 *
 * # Safety
 * `o` must be a live handle and `out` a writable pointer.
 */
enum SzStatus sz_ordinal_render(const struct SzOrdinal *o, char **out);

/**
 * Writes the sign of the comparison of `a` with `b` to `out`.
 *
 * # Safety
 * Both handles must be live and `out` writable.
 */
enum SzStatus sz_ordinal_cmp(const struct SzOrdinal *a, const struct SzOrdinal *b, int *out);

/**
 * # Safety
 * Both handles must be live and `out` writable.
 */
enum SzStatus sz_ordinal_add(const struct SzOrdinal *a,
                             const struct SzOrdinal *b,
                             struct SzOrdinal **out);

/**
 * # Safety
 * Both handles must be live and `out` writable.
 */
enum SzStatus sz_ordinal_mul(const struct SzOrdinal *a,
                             const struct SzOrdinal *b,
                             struct SzOrdinal **out);

/**
 * # Safety
 * Both handles must be live and `out` writable.
 */
enum SzStatus sz_ordinal_pow(const struct SzOrdinal *a,
                             const struct SzOrdinal *b,
                             struct SzOrdinal **out);

/**
 * Left division: `a = b·q + r` with `r < b`.
 *
 * # Safety
 * Both handles must be live and both outputs writable.
 */
enum SzStatus sz_ordinal_divmod(const struct SzOrdinal *a,
                                const struct SzOrdinal *b,
                                struct SzOrdinal **quotient,
                                struct SzOrdinal **remainder);

/**
 * Least gamma number at or above `a`.
 *
 * # Safety
 * `a` must be live and `out` writable.
 */
enum SzStatus sz_ordinal_gamma(const struct SzOrdinal *a, struct SzOrdinal **out);

/**
 * Szlenk index of `C([0, ξ])`.
 *
 * # Safety
 * `xi` must be live and `out` writable.
 */
enum SzStatus sz_c_interval_index(const struct SzOrdinal *xi, struct SzOrdinal **out);

/**
 * Writes 1 or 0 to `out`. `kind` is `"sz"`, `"i1"` or `"iinf"`; `value` is
 * an ordinal expression or `"infinity"`.
 *
 * # Safety
 * Both strings must be valid and `out` writable.
 */
enum SzStatus sz_attainable(const char *kind, const char *value, int *out);

/**
 * Runs the first norming pipeline and writes its JSON record.
 *
 * # Safety
 * Both strings must be valid and `out` writable.
 */
enum SzStatus sz_frak_g_record(const char *alpha, const char *theta, char **out);

/**
 * Runs the second norming pipeline and writes its JSON record.
 *
 * # Safety
 * All strings must be valid and `out` writable.
 */
enum SzStatus sz_frak_s_record(const char *alpha, const char *beta, const char *theta, char **out);

/**
 * Writes `"not-member"`, `"member"` or `"maximal"` for `node` in `Γ_ξ`.
 *
 * # Safety
 * Both strings must be valid and `out` writable.
 */
enum SzStatus sz_gnode_classify(const char *node, const char *xi, char **out);

/**
 * Writes the exact weight of `node` in `Γ_ξ` as `p/q`.
 *
 * # Safety
 * Both strings must be valid and `out` writable.
 */
enum SzStatus sz_gnode_prob(const char *node, const char *xi, char **out);

/**
 * Runs a command line (without the program name) and writes its standard
 * output and error text. Returns the process exit status.
 *
 * # Safety
 * `argv` must hold `argc` valid C strings; `out` and `err` may be null.
 */
int sz_run_cli(int argc, const char *const *argv, char **out, char **err);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sz_string_free(char *s);

/**
 * A copy of the calling thread's last error message, or null if the last
 * call succeeded. Free with [`sz_string_free`].
 */
char *sz_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SZLENK_CALC_H */
