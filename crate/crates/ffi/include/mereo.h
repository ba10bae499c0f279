#ifndef MEREO_H
#define MEREO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum MereoKind {
  MEREO_KIND_PARAMETRIZED = 0,
  MEREO_KIND_TYPE1 = 1,
  MEREO_KIND_TYPE2 = 2,
} MereoKind;

typedef enum MereoStatus {
  MEREO_STATUS_OK = 0,
  /**
   * The call ran but at least one check failed.
   */
  MEREO_STATUS_CHECK_FAILED = 1,
  MEREO_STATUS_INVALID_INPUT = 2,
  MEREO_STATUS_CAP_EXCEEDED = 3,
  MEREO_STATUS_NULL_POINTER = 4,
  MEREO_STATUS_INTERNAL = 5,
} MereoStatus;

/**
 * A verified (weak) extended contact algebra.
 */
typedef struct MereoAlgebra MereoAlgebra;

/**
 * A labelled finite topology.
 */
typedef struct MereoTopology MereoTopology;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *mereo_last_error(void);

/**
 * Frees a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void mereo_string_free(char *s);

/**
 * Parses a topology document `{"universe": [...], "subbasis": [[...], ...]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum MereoStatus mereo_topology_from_json(const char *json, struct MereoTopology **out);

/**
 * # Safety
 * `t` must come from [`mereo_topology_from_json`] and not have been freed.
 */
void mereo_topology_free(struct MereoTopology *t);

/**
 * Number of regular closed regions of the space.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum MereoStatus mereo_topology_region_count(const struct MereoTopology *t, uintptr_t *out);

/**
 * Tabulates the covering relation of the space's regions.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum MereoStatus mereo_algebra_from_topology(const struct MereoTopology *t,
                                             struct MereoAlgebra **out);

/**
 * Parses `{"atoms": k, "covering": [[a,b,d], ...]}` (or `"covering_mode":
 * "discrete"`) and accepts it if it satisfies the weak axioms.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum MereoStatus mereo_algebra_from_json(const char *json, struct MereoAlgebra **out);

/**
 * # Safety
 * `a` must come from this library and not have been freed.
 */
void mereo_algebra_free(struct MereoAlgebra *a);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum MereoStatus mereo_algebra_atom_count(const struct MereoAlgebra *a, uintptr_t *out);

/**
 * Whether the algebra is a full ECA (`true`) or only a weak one.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum MereoStatus mereo_algebra_is_eca(const struct MereoAlgebra *a, bool *out);

/**
 * `(x, y) ⊢ z` for elements given as atom masks.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum MereoStatus mereo_algebra_covers(const struct MereoAlgebra *a,
                                      uintptr_t x,
                                      uintptr_t y,
                                      uintptr_t z,
                                      bool *out);

/**
 * Runs every axiom family on a topology, algebra or frame document and
 * writes the JSON report to `*out`. Returns `CHECK_FAILED` when an axiom fails.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum MereoStatus mereo_check_axioms(const char *json, char **out);

/**
 * Builds a frame representation and writes the verification report.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum MereoStatus mereo_represent(const char *json, enum MereoKind kind, char **out);

/**
 * The golden pair of spaces separating contact from connectedness.
 *
 * # Safety
 * `out` must be writable.
 */
enum MereoStatus mereo_example1(char **out);

/**
 * A seeded random campaign; the report is identical for identical arguments.
 *
 * # Safety
 * `out` must be writable.
 */
enum MereoStatus mereo_random(uint64_t seed, uintptr_t trials, uintptr_t max_universe, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MEREO_H */
