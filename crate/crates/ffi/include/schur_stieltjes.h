#ifndef SCHUR_STIELTJES_H
#define SCHUR_STIELTJES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; the nonzero values below 20 equal the CLI exit codes.
 */
typedef enum SsStatus {
  SS_STATUS_OK = 0,
  SS_STATUS_PARSE = 2,
  SS_STATUS_NOT_REGULAR = 3,
  SS_STATUS_INSUFFICIENT_MOMENTS = 4,
  SS_STATUS_NO_NORMAL_INDEX = 5,
  SS_STATUS_INADMISSIBLE_PARAMETER = 6,
  SS_STATUS_INTERNAL_CONSISTENCY = 7,
  SS_STATUS_NULL_POINTER = 20,
  SS_STATUS_INVALID_UTF8 = 21,
  SS_STATUS_OUT_OF_RANGE = 22,
  SS_STATUS_PANIC = 23,
} SsStatus;

typedef enum SsParity {
  /**
   * Take the parity from the number of moments.
   */
  SS_PARITY_INFER = 0,
  SS_PARITY_ODD = 1,
  SS_PARITY_EVEN = 2,
} SsParity;

typedef enum SsCommand {
  SS_COMMAND_ANALYZE = 0,
  SS_COMMAND_EXPAND = 1,
  SS_COMMAND_SOLVE = 2,
  SS_COMMAND_STRING = 3,
} SsCommand;

/**
 * The result of expanding a problem.
 */
typedef struct SsExpansion SsExpansion;

/**
 * A moment problem: moments plus optional parity, free moment and parameter.
 */
typedef struct SsProblem SsProblem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Build a problem from `count` rational strings such as `"3/4"`.
 *
 * # Safety
 * `moments` must point to `count` valid NUL-terminated strings and `out`
 * must be writable.
 */
enum SsStatus ss_problem_from_moments(const char *const *moments,
                                      size_t count,
                                      struct SsProblem **out);

/**
 * Build a problem from a JSON document in the CLI input format.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` writable.
 */
enum SsStatus ss_problem_from_json(const char *json, struct SsProblem **out);

/**
 * # Safety
 * `problem` must be a live handle.
 */
enum SsStatus ss_problem_set_parity(struct SsProblem *problem, enum SsParity parity);

/**
 * Set the free moment `s_{2n−1}` of an odd problem; a null `value` clears it.
 *
 * # Safety
 * `problem` must be a live handle; `value` null or a NUL-terminated string.
 */
enum SsStatus ss_problem_set_free_tail(struct SsProblem *problem, const char *value);

/**
 * Set the parameter to `num/den` (ascending coefficient strings), or to
 * infinity when `den_len` is 0.
 *
 * # Safety
 * `problem` must be a live handle; `num` and `den` must point to `num_len`
 * and `den_len` NUL-terminated strings.
 */
enum SsStatus ss_problem_set_tau(struct SsProblem *problem,
                                 const char *const *num,
                                 size_t num_len,
                                 const char *const *den,
                                 size_t den_len);

/**
 * # Safety
 * `problem` must be null or a handle not yet freed.
 */
void ss_problem_free(struct SsProblem *problem);

/**
 * Run a command and write its JSON report to `out_json`. On failure the
 * JSON error object is written instead and the status says why.
 *
 * # Safety
 * `problem` must be a live handle and `out_json` writable.
 */
enum SsStatus ss_run(const struct SsProblem *problem, enum SsCommand command, char **out_json);

/**
 * Expand a problem into a handle.
 *
 * # Safety
 * `problem` must be a live handle and `out` writable.
 */
enum SsStatus ss_expand(const struct SsProblem *problem, struct SsExpansion **out);

/**
 * Number of steps `N`, or 0 for a null handle.
 *
 * # Safety
 * `e` must be null or a live handle.
 */
size_t ss_expansion_len(const struct SsExpansion *e);

/**
 * `κ_N`, the number of negative squares of the top Hankel block.
 *
 * # Safety
 * `e` must be a live handle and `out` writable.
 */
enum SsStatus ss_expansion_kappa(const struct SsExpansion *e, size_t *out);

/**
 * `k_N`, the number of negative squares of the matching shifted block.
 *
 * # Safety
 * `e` must be a live handle and `out` writable.
 */
enum SsStatus ss_expansion_k(const struct SsExpansion *e, size_t *out);

/**
 * Step `index` (0-based) as `{"order", "m", "l"}`.
 *
 * # Safety
 * `e` must be a live handle and `out_json` writable.
 */
enum SsStatus ss_expansion_step_json(const struct SsExpansion *e, size_t index, char **out_json);

/**
 * The full expansion report as JSON.
 *
 * # Safety
 * `e` must be a live handle and `out_json` writable.
 */
enum SsStatus ss_expansion_to_json(const struct SsExpansion *e, char **out_json);

/**
 * # Safety
 * `e` must be null or a handle not yet freed.
 */
void ss_expansion_free(struct SsExpansion *e);

/**
 * One-shot: parse `input` (CLI JSON format), run `command`, write the
 * report or error object to `out_json`.
 *
 * # Safety
 * `input` must be a NUL-terminated string and `out_json` writable.
 */
enum SsStatus ss_run_json(enum SsCommand command, const char *input, char **out_json);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void ss_string_free(char *s);

/**
 * Message of the last failure on this thread, or null. Valid until the
 * next call into the library from the same thread.
 */
const char *ss_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *ss_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHUR_STIELTJES_H */
