#ifndef NICHOLS_H
#define NICHOLS_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>



/**
 * Status codes; the first four agree with the CLI exit codes.
 */
typedef enum NicholsStatus {
  NICHOLS_STATUS_OK = 0,
  /**
   * The computation finished with a negative verdict.
   */
  NICHOLS_STATUS_VERDICT = 1,
  NICHOLS_STATUS_INVALID_INPUT = 2,
  NICHOLS_STATUS_BUDGET = 3,
  NICHOLS_STATUS_NULL_POINTER = 4,
  NICHOLS_STATUS_BUFFER_TOO_SMALL = 5,
  NICHOLS_STATUS_PANIC = 6,
} NicholsStatus;

/**
 * Opaque braided vector space.
 */
typedef struct NicholsBraiding NicholsBraiding;

/**
 * The message of the last failure on this thread, or null. The pointer stays
 * valid until the next call into this library on the same thread.
 */
const char *nichols_last_error(void);

/**
 * Builds a braiding from a JSON input object (the same keys as CLI job
 * inputs) or from the string `fixture:NAME`.
 *
 * # Safety
 * `input` must be a nul-terminated string and `out` a valid pointer.
 */
enum NicholsStatus nichols_braiding_new(const char *input, struct NicholsBraiding **out);

/**
 * # Safety
 * `b` must come from [`nichols_braiding_new`] and not be freed yet, or be null.
 */
void nichols_braiding_free(struct NicholsBraiding *b);

/**
 * Dimension of the underlying vector space, or 0 for a null handle.
 *
 * # Safety
 * `b` must be a live handle or null.
 */
size_t nichols_braiding_dim(const struct NicholsBraiding *b);

/**
 * Writes the Nichols algebra dimensions of degrees `0..=n_max` to `out`,
 * which must hold `n_max + 1` entries. A `work_budget` of 0 selects the
 * default. When the budget runs out, the degrees not reached are set to
 * `SIZE_MAX` and `NICHOLS_STATUS_BUDGET` is returned.
 *
 * # Safety
 * `b` must be a live handle and `out` must point to `out_len` writable entries.
 */
enum NicholsStatus nichols_dims_compute(const struct NicholsBraiding *b,
                                        size_t n_max,
                                        uint64_t work_budget,
                                        size_t *out,
                                        size_t out_len);

/**
 * Compares the `d`-atic cover with the Nichols algebra through degree
 * `n_max`. Returns `NICHOLS_STATUS_OK` when they agree and
 * `NICHOLS_STATUS_VERDICT` on a mismatch, whose degree is written to
 * `mismatch_degree` (when non-null).
 *
 * # Safety
 * `b` must be a live handle; `mismatch_degree` must be valid or null.
 */
enum NicholsStatus nichols_cover_check(const struct NicholsBraiding *b,
                                       size_t d,
                                       size_t n_max,
                                       uint64_t work_budget,
                                       size_t *mismatch_degree);

/**
 * Runs a CLI job given as JSON. The rendered output is stored in `*output`
 * (release it with [`nichols_string_free`]) and the exit status in
 * `*exit_code`. The return value reports whether the job could be read.
 *
 * # Safety
 * `job` must be a nul-terminated string; `output` and `exit_code` valid pointers.
 */
enum NicholsStatus nichols_run_job(const char *job, char **output, int *exit_code);

/**
 * # Safety
 * `s` must come from this library and not be freed yet, or be null.
 */
void nichols_string_free(char *s);

#endif /* NICHOLS_H */
