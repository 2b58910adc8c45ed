#ifndef STARKIT_H
#define STARKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum StarkitStatus {
  STARKIT_STATUS_OK = 0,
  STARKIT_STATUS_NULL_POINTER = 1,
  STARKIT_STATUS_INVALID_UTF8 = 2,
  STARKIT_STATUS_PARSE = 3,
  STARKIT_STATUS_INVALID_INPUT = 4,
  STARKIT_STATUS_NOT_AN_EIGENVALUE = 5,
  STARKIT_STATUS_CAP_EXCEEDED = 6,
  STARKIT_STATUS_UNSUPPORTED_SPECTRUM = 7,
  STARKIT_STATUS_PRECONDITION_VIOLATED = 8,
  STARKIT_STATUS_PANIC = 9,
} StarkitStatus;

typedef struct StarkitCatalog StarkitCatalog;

typedef struct StarkitGraph StarkitGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. Valid until the
 * next call into this library from the same thread.
 */
const char *starkit_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void starkit_string_free(char *s);

/**
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum StarkitStatus starkit_graph_from_graph6(const char *text, struct StarkitGraph **out);

/**
 * Built-in graph such as `petersen`, `G`, `K5` or `K1,4`.
 *
 * # Safety
 * As for `starkit_graph_from_graph6`.
 */
enum StarkitStatus starkit_graph_named(const char *name, struct StarkitGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library, freed once.
 */
void starkit_graph_free(struct StarkitGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t starkit_graph_order(const struct StarkitGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum StarkitStatus starkit_graph_to_graph6(const struct StarkitGraph *g, char **out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum StarkitStatus starkit_spectrum_json(const struct StarkitGraph *g, char **out);

/**
 * Enumerates the λ-star sets. `cap` 0 means no more than `C(n, k)`.
 *
 * # Safety
 * `g` must be a live handle, `lambda` a nul-terminated string and `out`
 * writable.
 */
enum StarkitStatus starkit_star_sets(const struct StarkitGraph *g,
                                     const char *lambda,
                                     size_t cap,
                                     struct StarkitCatalog **out);

/**
 * Number of star sets, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t starkit_catalog_len(const struct StarkitCatalog *c);

/**
 * `{"lambda", "k_lambda", "complete", "star_sets": [{"X", "main"}]}`
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum StarkitStatus starkit_catalog_json(const struct StarkitCatalog *c, char **out);

/**
 * # Safety
 * `c` must be null or a handle from this library, freed once.
 */
void starkit_catalog_free(struct StarkitCatalog *c);

/**
 * Star-set invariants at λ as JSON.
 *
 * # Safety
 * As for `starkit_star_sets`.
 */
enum StarkitStatus starkit_invariants_json(const struct StarkitGraph *g,
                                           const char *lambda,
                                           size_t cap,
                                           char **out);

/**
 * Non-isomorphism screen. `*not_isomorphic` is set to 1 when a difference
 * was found and 0 when the screen is inconclusive. `verdict_json` may be
 * null; otherwise it receives the full witness trail.
 *
 * # Safety
 * `a`, `b` must be live handles; `not_isomorphic` must be writable.
 */
enum StarkitStatus starkit_isocheck(const struct StarkitGraph *a,
                                    const struct StarkitGraph *b,
                                    int32_t *not_isomorphic,
                                    char **verdict_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STARKIT_H */
