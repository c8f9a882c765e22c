#ifndef POWERDOM_H
#define POWERDOM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>

// Result codes shared by every fallible entry point.
typedef enum PdStatus {
  PD_STATUS_OK = 0,
  PD_STATUS_NULL_POINTER = 1,
  PD_STATUS_INVALID_INPUT = 2,
  PD_STATUS_PARSE = 3,
  // An exact solver's vertex cap was exceeded.
  PD_STATUS_RESOURCE = 4,
  PD_STATUS_BUFFER_TOO_SMALL = 5,
  // A Rust panic was caught at the boundary; this is a bug.
  PD_STATUS_INTERNAL = 6,
} PdStatus;

// Opaque graph handle.
typedef struct PdGraph PdGraph;

// Opaque weighted-tree handle.
typedef struct PdTree PdTree;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. The pointer
// stays valid until the next `pd_*` call on the same thread.
const char *pd_last_error_message(void);

// Parses an edge-list document (1-based ids in the text).
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum PdStatus pd_graph_parse(const char *text, struct PdGraph **out);

// Builds a graph from `m` edges `(us[i], vs[i])`, 0-based.
//
// # Safety
// `us` and `vs` must point to `m` readable ids each; `out` must be writable.
enum PdStatus pd_graph_from_edges(size_t n,
                                  const size_t *us,
                                  const size_t *vs,
                                  size_t m,
                                  struct PdGraph **out);

// The extremal family `E_k` for even `r >= 4`.
//
// # Safety
// `out` must be writable.
enum PdStatus pd_graph_gen_e(size_t r, size_t k, struct PdGraph **out);

// Releases a graph. NULL is ignored.
//
// # Safety
// `g` must come from this library and not be used afterwards.
void pd_graph_free(struct PdGraph *g);

// Vertex count, or 0 for NULL.
//
// # Safety
// `g` must be NULL or a live handle.
size_t pd_graph_vertex_count(const struct PdGraph *g);

// Edge count, or 0 for NULL.
//
// # Safety
// `g` must be NULL or a live handle.
size_t pd_graph_edge_count(const struct PdGraph *g);

// Minimum-cardinality power dominating set by exhaustive search.
//
// # Safety
// `g` must be a live handle; see the module notes for the buffer.
enum PdStatus pd_min_pds(const struct PdGraph *g,
                         size_t *out_ids,
                         size_t capacity,
                         size_t *out_len);

// Minimum-weight power dominating set by exhaustive search. `weights`
// holds one positive weight per vertex.
//
// # Safety
// `g` must be a live handle, `weights` must hold `n_weights` values and
// `out_weight` must be writable; see the module notes for the buffer.
enum PdStatus pd_min_weight_pds(const struct PdGraph *g,
                                const double *weights,
                                size_t n_weights,
                                double *out_weight,
                                size_t *out_ids,
                                size_t capacity,
                                size_t *out_len);

// Whether `ids` is a power dominating set of `g`.
//
// # Safety
// `g` must be a live handle, `ids` must hold `len` values and `out` must
// be writable.
enum PdStatus pd_is_pds(const struct PdGraph *g, const size_t *ids, size_t len, bool *out);

// Observation closure of `seeds`, with `pre` observed in advance.
// Writes the observed vertices in ascending order.
//
// # Safety
// `g` must be a live handle, `seeds`/`pre` must hold `n_seeds`/`n_pre`
// values; see the module notes for the buffer.
enum PdStatus pd_closure(const struct PdGraph *g,
                         const size_t *seeds,
                         size_t n_seeds,
                         const size_t *pre,
                         size_t n_pre,
                         size_t *out_ids,
                         size_t capacity,
                         size_t *out_len);

// Parses a weighted-tree document.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum PdStatus pd_tree_parse(const char *text, struct PdTree **out);

// Releases a tree. NULL is ignored.
//
// # Safety
// `t` must come from this library and not be used afterwards.
void pd_tree_free(struct PdTree *t);

// Vertex count, or 0 for NULL.
//
// # Safety
// `t` must be NULL or a live handle.
size_t pd_tree_vertex_count(const struct PdTree *t);

// Minimum-weight power dominating set of a tree in linear time. The ids
// are document ids minus one, ascending.
//
// # Safety
// `t` must be a live handle and `out_weight` writable; see the module
// notes for the buffer.
enum PdStatus pd_wpdt(const struct PdTree *t,
                      double *out_weight,
                      size_t *out_ids,
                      size_t capacity,
                      size_t *out_len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POWERDOM_H */
