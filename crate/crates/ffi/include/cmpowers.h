#ifndef CMPOWERS_H
#define CMPOWERS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum CmpStatus {
  CMP_STATUS_OK = 0,
  CMP_STATUS_NULL_POINTER = 1,
  CMP_STATUS_INVALID_INPUT = 2,
  CMP_STATUS_OUT_OF_RANGE = 3,
  CMP_STATUS_PANIC = 4,
} CmpStatus;

/**
 * Shape of a graph as used by the characterizations.
 */
typedef enum CmpGraphClass {
  CMP_GRAPH_CLASS_PATH = 0,
  CMP_GRAPH_CLASS_CYCLE = 1,
  CMP_GRAPH_CLASS_TWO_DISJOINT_EDGES = 2,
  CMP_GRAPH_CLASS_OTHER = 3,
} CmpGraphClass;

/**
 * Opaque simple graph.
 */
typedef struct CmpGraph CmpGraph;

/**
 * Opaque monomial ideal.
 */
typedef struct CmpIdeal CmpIdeal;

/**
 * The six combinatorial predictions for a graph.
 */
typedef struct CmpCriteria {
  bool cm_sym2;
  bool cm_sym_high;
  bool eq2;
  bool eq_high;
  bool cm_ord2;
  bool cm_ord_high;
} CmpCriteria;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The
 * pointer stays valid until the next call into this library on the same
 * thread.
 */
const char *cmp_last_error_message(void);

/**
 * Library version as a static nul-terminated string.
 */
const char *cmp_version(void);

/**
 * Builds a graph on vertices `1..=n` from `edge_count` pairs stored flat
 * in `edges` (`u0, v0, u1, v1, ...`).
 */
enum CmpStatus cmp_graph_new(size_t n,
                             const uint32_t *edges,
                             size_t edge_count,
                             struct CmpGraph **out);

/**
 * Parses the text format: a header `n <count>` then one `u v` per line.
 */
enum CmpStatus cmp_graph_parse(const char *text, struct CmpGraph **out);

void cmp_graph_free(struct CmpGraph *g);

enum CmpStatus cmp_graph_vertex_count(const struct CmpGraph *g, size_t *out);

enum CmpStatus cmp_graph_edge_count(const struct CmpGraph *g, size_t *out);

/**
 * Diameter, or -1 when the graph is disconnected.
 */
enum CmpStatus cmp_graph_diameter(const struct CmpGraph *g, int32_t *out);

enum CmpStatus cmp_graph_class(const struct CmpGraph *g, enum CmpGraphClass *out);

enum CmpStatus cmp_graph_criteria(const struct CmpGraph *g, struct CmpCriteria *out);

/**
 * Full analysis for powers `1..=m_max` as a JSON document. Release the
 * string with [`cmp_string_free`].
 */
enum CmpStatus cmp_graph_analyze_json(const struct CmpGraph *g, uint32_t m_max, char **out);

void cmp_string_free(char *s);

enum CmpStatus cmp_symbolic_power(const struct CmpGraph *g, uint32_t m, struct CmpIdeal **out);

enum CmpStatus cmp_ordinary_power(const struct CmpGraph *g, uint32_t m, struct CmpIdeal **out);

void cmp_ideal_free(struct CmpIdeal *i);

/**
 * Number of variables of the ambient ring.
 */
enum CmpStatus cmp_ideal_vars(const struct CmpIdeal *i, size_t *out);

enum CmpStatus cmp_ideal_generator_count(const struct CmpIdeal *i, size_t *out);

/**
 * Copies the exponent vector of minimal generator `index` into `exps`,
 * which must hold `len == vars` entries.
 */
enum CmpStatus cmp_ideal_generator(const struct CmpIdeal *i,
                                   size_t index,
                                   uint32_t *exps,
                                   size_t len);

enum CmpStatus cmp_ideal_contains(const struct CmpIdeal *i,
                                  const uint32_t *exps,
                                  size_t len,
                                  bool *out);

enum CmpStatus cmp_ideal_equals(const struct CmpIdeal *a, const struct CmpIdeal *b, bool *out);

/**
 * Depth of `S/I`.
 */
enum CmpStatus cmp_ideal_depth(const struct CmpIdeal *i, size_t *out);

/**
 * Krull dimension of `S/I`.
 */
enum CmpStatus cmp_ideal_krull_dim(const struct CmpIdeal *i, size_t *out);

enum CmpStatus cmp_ideal_is_cohen_macaulay(const struct CmpIdeal *i, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CMPOWERS_H */
