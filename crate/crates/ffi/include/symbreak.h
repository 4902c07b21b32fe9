#ifndef SYMBREAK_H
#define SYMBREAK_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SbIndexKind {
  /**
   * The index equals `value`.
   */
  SB_INDEX_KIND_FINITE = 0,
  /**
   * The index is larger than `value`, the largest count tried.
   */
  SB_INDEX_KIND_EXCEEDS = 1,
  /**
   * No number of colours suffices.
   */
  SB_INDEX_KIND_INFINITE = 2,
} SbIndexKind;

/**
 * Result code of every fallible call.
 */
typedef enum SbStatus {
  SB_STATUS_OK = 0,
  SB_STATUS_NULL_POINTER = 1,
  SB_STATUS_INVALID_UTF8 = 2,
  SB_STATUS_PARSE = 3,
  /**
   * The graph is too large for an exact computation.
   */
  SB_STATUS_LIMIT = 4,
  SB_STATUS_PRECONDITION = 5,
  /**
   * No 2-colouring breaking every small automorphism was found.
   */
  SB_STATUS_THEOREM_FALSIFIED = 6,
  SB_STATUS_BUFFER_TOO_SMALL = 7,
  SB_STATUS_INTERNAL = 8,
  SB_STATUS_PANIC = 9,
} SbStatus;

/**
 * Opaque result of [`sb_construct`].
 */
typedef struct SbConstruction SbConstruction;

/**
 * Opaque graph handle.
 */
typedef struct SbGraph SbGraph;

typedef struct SbIndex {
  enum SbIndexKind kind;
  uint32_t value;
} SbIndex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread, or NULL. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *sb_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *sb_version(void);

/**
 * # Safety
 * `s` must be NULL or a string obtained from this library.
 */
void sb_string_free(char *s);

/**
 * Parses one graph6 string.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum SbStatus sb_graph_from_graph6(const char *text, struct SbGraph **out);

/**
 * Parses an edge list: a line holding the order, then one `u v` pair per
 * line.
 *
 * # Safety
 * As for [`sb_graph_from_graph6`].
 */
enum SbStatus sb_graph_from_edge_list(const char *text, struct SbGraph **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library not yet freed.
 */
void sb_graph_free(struct SbGraph *g);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t sb_graph_order(const struct SbGraph *g);

/**
 * Number of edges, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t sb_graph_size(const struct SbGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SbStatus sb_graph_to_graph6(const struct SbGraph *g, char **out);

/**
 * Order of the automorphism group.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SbStatus sb_automorphism_count(const struct SbGraph *g, uint64_t *out);

/**
 * Number of small automorphisms (those moving some vertex to a neighbour).
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SbStatus sb_small_automorphism_count(const struct SbGraph *g, uint64_t *out);

/**
 * Distinguishing index, trying up to `max_colours` colours (0 selects the
 * default).
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SbStatus sb_distinguishing_index(const struct SbGraph *g,
                                      uint32_t max_colours,
                                      struct SbIndex *out);

/**
 * Small distinguishing index; arguments as for [`sb_distinguishing_index`].
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SbStatus sb_small_distinguishing_index(const struct SbGraph *g,
                                            uint32_t max_colours,
                                            struct SbIndex *out);

/**
 * Runs the construction. Fails with `SB_STATUS_PRECONDITION` for graphs
 * that are disconnected or of order below six.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SbStatus sb_construct(const struct SbGraph *g, struct SbConstruction **out);

/**
 * # Safety
 * `c` must be NULL or a handle from [`sb_construct`] not yet freed.
 */
void sb_construction_free(struct SbConstruction *c);

/**
 * Whether the construction's colouring was checked to break every small
 * automorphism.
 *
 * # Safety
 * `c` must be NULL or a live handle.
 */
bool sb_construction_verified(const struct SbConstruction *c);

/**
 * Copies the edge colours, in the graph's lexicographic edge order, into
 * `buf`. `len` must be at least the graph's size.
 *
 * # Safety
 * `c` must be a live handle and `buf` valid for `len` bytes.
 */
enum SbStatus sb_construction_colours(const struct SbConstruction *c, uint8_t *buf, size_t len);

/**
 * The colouring as `u v colour` lines.
 *
 * # Safety
 * `c` must be a live handle and `out` writable.
 */
enum SbStatus sb_construction_text(const struct SbConstruction *c, char **out);

/**
 * The construction trace as a JSON object.
 *
 * # Safety
 * `c` must be a live handle and `out` writable.
 */
enum SbStatus sb_construction_trace_json(const struct SbConstruction *c, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SYMBREAK_H */
