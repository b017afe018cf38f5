#ifndef STRONGCOLOR_H
#define STRONGCOLOR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ScStatus {
  SC_STATUS_OK = 0,
  SC_STATUS_NULL_POINTER = 1,
  /*
   Malformed text, bad edge list, nonplanar or non-subcubic input.
   */
  SC_STATUS_INVALID_INPUT = 2,
  /*
   Above the exact solver's edge guard, or a palette too large.
   */
  SC_STATUS_TOO_LARGE = 3,
  /*
   An internal invariant failed; this is a bug.
   */
  SC_STATUS_INTERNAL = 4,
} ScStatus;

/*
 Opaque edge coloring.
 */
typedef struct ScColoring ScColoring;

/*
 Opaque plane multigraph.
 */
typedef struct ScGraph ScGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread; empty after a success.
 Valid until the next call into the library on the same thread.
 */
const char *sc_last_error(void);

/*
 # Safety
 `s` must come from this library and not have been freed. Null is ignored.
 */
void sc_string_free(char *s);

/*
 Parses a `pmg` file or an edge list.

 # Safety
 `text` must be a NUL-terminated string; `out` must be writable.
 */
enum ScStatus sc_graph_parse(const char *text, struct ScGraph **out);

/*
 Embeds `edge_count` edges given as `endpoints[2i], endpoints[2i + 1]`.

 # Safety
 `endpoints` must point to `2 * edge_count` readable values (it may be
 null when `edge_count` is 0); `out` must be writable.
 */
enum ScStatus sc_graph_from_edges(size_t vertex_count,
                                  const uint32_t *endpoints,
                                  size_t edge_count,
                                  struct ScGraph **out);

/*
 Seeded random subcubic plane multigraph with `vertex_count` vertices.

 # Safety
 `out` must be writable.
 */
enum ScStatus sc_graph_generate(size_t vertex_count,
                                uint64_t seed,
                                double two_vertex_fraction,
                                bool allow_parallel,
                                struct ScGraph **out);

/*
 One of the built-in instances, e.g. `"prism"` or `"dodecahedron"`.

 # Safety
 `name` must be a NUL-terminated string; `out` must be writable.
 */
enum ScStatus sc_graph_named(const char *name, struct ScGraph **out);

/*
 # Safety
 `g` must be a live graph handle or null.
 */
size_t sc_graph_vertex_count(const struct ScGraph *g);

/*
 # Safety
 `g` must be a live graph handle or null.
 */
size_t sc_graph_edge_count(const struct ScGraph *g);

/*
 Writes the graph in `pmg` form; free the string with [`sc_string_free`].

 # Safety
 `g` must be a live graph handle; `out` must be writable.
 */
enum ScStatus sc_graph_serialize(const struct ScGraph *g, char **out);

/*
 # Safety
 `g` must come from this library and not have been freed. Null is ignored.
 */
void sc_graph_free(struct ScGraph *g);

/*
 Strong coloring with at most 9 colors, by reduction.

 # Safety
 `g` must be a live graph handle; `out` must be writable.
 */
enum ScStatus sc_color(const struct ScGraph *g, struct ScColoring **out);

/*
 Parses a coloring file (`k <palette>` then `c <edge> <color>` lines).

 # Safety
 `text` must be a NUL-terminated string; `out` must be writable.
 */
enum ScStatus sc_coloring_parse(const char *text, struct ScColoring **out);

/*
 # Safety
 `c` must be a live coloring handle; `out` must be writable.
 */
enum ScStatus sc_coloring_serialize(const struct ScColoring *c, char **out);

/*
 Color of `edge`, or 0 if it is uncolored or out of range.

 # Safety
 `c` must be a live coloring handle or null.
 */
uint8_t sc_coloring_get(const struct ScColoring *c, size_t edge);

/*
 Largest color used, 0 for an empty coloring.

 # Safety
 `c` must be a live coloring handle or null.
 */
uint8_t sc_coloring_max_color(const struct ScColoring *c);

/*
 # Safety
 `c` must come from this library and not have been freed. Null is ignored.
 */
void sc_coloring_free(struct ScColoring *c);

/*
 Sets `*valid` to whether `c` is a total strong coloring of `g`. A
 coloring naming edges the graph lacks is invalid input.

 # Safety
 `g` and `c` must be live handles; `valid` must be writable.
 */
enum ScStatus sc_verify(const struct ScGraph *g, const struct ScColoring *c, bool *valid);

/*
 Strong chromatic index if it is at most `max_k`, else -1. Graphs above
 the edge guard need `force`.

 # Safety
 `g` must be a live graph handle; `chi` must be writable.
 */
enum ScStatus sc_exact(const struct ScGraph *g, uint8_t max_k, bool force, int32_t *chi);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRONGCOLOR_H */
