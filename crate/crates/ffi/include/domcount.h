/* Generated by cbindgen from crates/ffi/src; do not edit. */

#ifndef DOMCOUNT_H
#define DOMCOUNT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible `dc_*` call. On anything but
// `DC_STATUS_OK`, `dc_last_error()` describes the failure.
typedef enum DcStatus {
  DC_STATUS_OK = 0,
  // A required pointer argument was null.
  DC_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  DC_STATUS_INVALID_UTF8 = 2,
  // Malformed graph6, family, condition, weights or other input.
  DC_STATUS_INVALID_INPUT = 3,
  // The enumeration would exceed the configured cap.
  DC_STATUS_CAP_EXCEEDED = 4,
  // The check needs a regular (or 2-regular) graph.
  DC_STATUS_NOT_REGULAR = 5,
  // Internal failure; the library state is still usable.
  DC_STATUS_PANIC = 6,
} DcStatus;

// Opaque graph handle.
typedef struct DcGraph DcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *dc_version(void);

// Sets the enumeration cap (log2 of the largest search space) for all
// later calls; 0 restores the default.
enum DcStatus dc_set_cap_bits(uint32_t bits);

// Parses a graph6 string.
enum DcStatus dc_graph_from_graph6(const char *text, struct DcGraph **out);

// Builds a named graph such as `"cycle:6"` or `"complete:3+complete:3"`.
enum DcStatus dc_graph_from_family(const char *spec, struct DcGraph **out);

// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
// `edges` (`u0, v0, u1, v1, ...`).
enum DcStatus dc_graph_from_edges(uint32_t n,
                                  const uint32_t *edges,
                                  uintptr_t edge_count,
                                  struct DcGraph **out);

// Releases a graph handle. Null is ignored.
void dc_graph_free(struct DcGraph *g);

// Number of vertices, or 0 for a null handle.
uint32_t dc_graph_vertex_count(const struct DcGraph *g);

enum DcStatus dc_graph_to_graph6(const struct DcGraph *g, char **out);

// Counts `"ds"`, `"sds"`, `"minimal-ds"`, `"mis"` or `"is"`.
enum DcStatus dc_count_structure(const struct DcGraph *g, const char *structure, char **out);

// Legal colorings for a condition spec (`"dominating"`, `"proper"`,
// `"rainbow"`, `"at-least:C:M"`, `"file:PATH"`) over `colors` colors,
// weighted by `weights` (`"1,3/2"`) unless it is null.
enum DcStatus dc_count_legal(const struct DcGraph *g,
                             const char *condition,
                             uint32_t colors,
                             bool closed,
                             const char *weights,
                             char **out);

// Domination polynomial as a JSON array of decimal coefficient strings,
// constant term first.
enum DcStatus dc_domination_polynomial(const struct DcGraph *g, bool strong, char **out);

// `xhom(G, H)`, or `hom(G, H)` when `plain_hom`, for an image spec
// (`"hind"`, `"eq:Q"`, `"kq:Q"`, `"file:PATH"`).
enum DcStatus dc_hom_count(const struct DcGraph *g, const char *image, bool plain_hom, char **out);

// Runs one bound check and returns its reports as a JSON array. `check`
// is `ds`, `legal[:CONDITION]`, `poly[:MU]`, `prorain[:Q]`,
// `cycle-extremal`, `background[:IMAGE]` or `shearer[:ds|sds]`.
enum DcStatus dc_bound_check(const struct DcGraph *g, const char *check, char **out);

// Message for the most recent failed call on this thread, or null if the
// last call succeeded. The pointer stays valid until the next `dc_*` call
// on the same thread.
const char *dc_last_error(void);

// Frees a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from a `dc_*` output parameter and not be freed twice.
void dc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DOMCOUNT_H */
