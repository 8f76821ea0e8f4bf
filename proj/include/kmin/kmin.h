/* C interface to the kmin library.
 *
 * Every function returns a kmin_status. On failure the message is available
 * from kmin_last_error() on the calling thread until the next call. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with kmin_string_free().
 */
#ifndef KMIN_KMIN_H
#define KMIN_KMIN_H

#include <stdint.h>

#if defined(_WIN32)
#define KMIN_API __declspec(dllexport)
#else
#define KMIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kmin_status {
  KMIN_OK = 0,
  KMIN_E_INVALID_ARGUMENT,
  KMIN_E_INVALID_PARAMS,
  KMIN_E_PARSE,
  KMIN_E_TOO_SMALL,
  KMIN_E_TOO_LARGE,
  KMIN_E_EMPTY,
  KMIN_E_NOT_CONNECTED,
  KMIN_E_NO_SUCH_EDGE,
  KMIN_E_PRECONDITION,
  KMIN_E_NO_SEPARATOR_THROUGH_X,
  KMIN_E_WITNESS_NOT_FOUND,
  KMIN_E_NO_MINIMAL_REGION,
  KMIN_E_CLASS_MISMATCH,
  KMIN_E_NOT_CONVERGED,
  KMIN_E_VALIDATION_FAILED,
  KMIN_E_INTERNAL,
  KMIN_E_NULL_POINTER,
  KMIN_E_UNSUPPORTED
} kmin_status;

typedef struct kmin_graph kmin_graph;
typedef struct kmin_verifier kmin_verifier;

KMIN_API const char* kmin_version(void);
KMIN_API const char* kmin_status_name(kmin_status status);
KMIN_API const char* kmin_last_error(void);
KMIN_API void kmin_string_free(char* s);

/* Graphs. format: "auto", "graph6", "edges", "json" or "multi" (edge list
 * with a multiplicity column). "auto" picks "multi" when the first edge line
 * has three fields. */
KMIN_API kmin_status kmin_graph_parse(const char* text, const char* format, kmin_graph** out);
KMIN_API kmin_status kmin_graph_from_edges(int n, const int* pairs, int m, kmin_graph** out);
KMIN_API void kmin_graph_free(kmin_graph* g);
KMIN_API kmin_status kmin_graph_order(const kmin_graph* g, int* out);
KMIN_API kmin_status kmin_graph_is_multigraph(const kmin_graph* g, int* out);
KMIN_API kmin_status kmin_graph_to_graph6(const kmin_graph* g, char** out);

KMIN_API kmin_status kmin_vertex_connectivity(const kmin_graph* g, int* out);
KMIN_API kmin_status kmin_edge_connectivity(const kmin_graph* g, int* out);

/* cls is one of 'a', 'b', 'c', 'd'. */
KMIN_API kmin_status kmin_in_class(const kmin_graph* g, char cls, int k, int* out);
KMIN_API kmin_status kmin_check_json(const kmin_graph* g, int k, char** json);
/* KMIN_E_CLASS_MISMATCH when g is not in the class. */
KMIN_API kmin_status kmin_witness_json(const kmin_graph* g, char cls, int k, int explain, char** json);

/* Stream verification. classes: any subset of "abcd". */
KMIN_API kmin_status kmin_verify_csv_header(char** out);
KMIN_API kmin_status kmin_verifier_new(const char* classes, int k_min, int k_max, kmin_verifier** out);
KMIN_API void kmin_verifier_free(kmin_verifier* v);
/* CSV rows for one graph6 line; *violations receives the number of rows
 * whose bound fails. KMIN_E_PARSE skips the line. */
KMIN_API kmin_status kmin_verifier_feed(kmin_verifier* v, const char* graph6, char** csv_rows, int* violations);
KMIN_API kmin_status kmin_verifier_summary_json(const kmin_verifier* v, char** json);

/* Isomorphism classes of order 1..max_n (or exactly max_n), one graph6 per
 * line. */
KMIN_API kmin_status kmin_enumerate(int max_n, int exact, char** graph6_lines);
KMIN_API kmin_status kmin_random_graph6(int n, double p, uint64_t seed, char** out);

/* Finite constructions ("band:k=3,l=2") or family truncations
 * ("clique-tree:r=2,k=4" with radius >= 0). format: "graph6", "edges" or
 * "json"; multigraphs only support "edges". sidecar receives labels and,
 * for truncations, the frontier; pass NULL to skip it. */
KMIN_API kmin_status kmin_construct(const char* spec, int radius, const char* format, char** graph, char** sidecar);

/* End degree of a family end ("left", "right", or a branch prefix like
 * "0.1"). mode: "vertex" or "edge". *mismatch is set when a converged value
 * contradicts the family's declared value. */
KMIN_API kmin_status kmin_end_degree_json(const char* family, const char* end, const char* mode, int r_max,
                                          int window, char** json, int* converged, int* mismatch);
KMIN_API kmin_status kmin_family_ends_json(const char* family, int prefix_depth, char** json);
KMIN_API kmin_status kmin_certify_edges_json(const char* family, int r, int pad, int k, char** json,
                                             int* all_certified);
KMIN_API kmin_status kmin_validate_json(const char* family, int k, char cls, char** json);

#ifdef __cplusplus
}
#endif

#endif
