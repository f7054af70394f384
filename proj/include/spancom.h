/* spancom — spanning simplicial complexes of finite connected graphs.
 *
 * C interface to the shared library. All functions returning
 * spancom_status leave their outputs untouched on failure;
 * spancom_last_error() describes the most recent failure on the calling
 * thread. Strings returned through char** outputs are heap-allocated and
 * must be released with spancom_string_free().
 */
#ifndef SPANCOM_H
#define SPANCOM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spancom_status {
    SPANCOM_OK = 0,
    SPANCOM_ERR_SELF_LOOP = 1,
    SPANCOM_ERR_DUPLICATE_EDGE = 2,
    SPANCOM_ERR_VERTEX_OUT_OF_RANGE = 3,
    SPANCOM_ERR_NOT_UNICYCLIC = 4,
    SPANCOM_ERR_BAD_CYCLE_LENGTH = 5,
    SPANCOM_ERR_BAD_ATTACHMENT = 6,
    SPANCOM_ERR_DISCONNECTED = 7,
    SPANCOM_ERR_TOO_LARGE = 8,
    SPANCOM_ERR_NOT_CANONICAL = 9,
    SPANCOM_ERR_EMPTY_INPUT = 10,
    SPANCOM_ERR_LABEL_OUT_OF_RANGE = 11,
    SPANCOM_ERR_NOT_PURE = 12,
    SPANCOM_ERR_NOT_PERMUTATION = 13,
    SPANCOM_ERR_ZERO_NUMERATOR = 14,
    SPANCOM_ERR_BAD_PARAMS = 15,
    SPANCOM_ERR_NEGATIVE_UPPER = 16,
    SPANCOM_ERR_PARSE = 17,
    SPANCOM_ERR_INVALID_ARGUMENT = 18,
    SPANCOM_ERR_INTERNAL = 19
} spancom_status;

/* Opaque simple-graph handle; edge labels are positional (1-based). */
typedef struct spancom_graph spancom_graph;

/* endpoints holds edge_count (u, v) pairs flattened as
 * u1, v1, u2, v2, ...; vertices are 1-based. */
spancom_status spancom_graph_build(int vertex_count, const int* endpoints,
                                   int edge_count, spancom_graph** out);

/* Edge-list text: first non-comment line "n", then one "u v" line per edge;
 * '#' starts a comment. */
spancom_status spancom_graph_parse(const char* text, spancom_graph** out);

/* Canonical U_{n,m}: cycle on edges 1..m, pendant edge m+k attaches vertex
 * m+k to attachment[k-1]. attachment_len must equal n - m. */
spancom_status spancom_unicyclic_make(int n, int m, const int* attachment,
                                      int attachment_len, spancom_graph** out);

/* shape is "chain", "star" or "seed:<K>" (deterministic pseudo-random). */
spancom_status spancom_unicyclic_gen(int n, int m, const char* shape,
                                     spancom_graph** out);

void spancom_graph_free(spancom_graph* g);

/* Return -1 when g is null. */
int spancom_graph_vertex_count(const spancom_graph* g);
int spancom_graph_edge_count(const spancom_graph* g);

spancom_status spancom_graph_is_connected(const spancom_graph* g, int* out);

/* Canonical edge-list text; parsing it back reproduces g exactly. */
spancom_status spancom_graph_serialize(const spancom_graph* g, char** out);

/* One spanning tree per line as sorted space-separated labels, lex order. */
spancom_status spancom_trees_list(const spancom_graph* g, char** out);

/* Matrix-tree count as a decimal string; works beyond the enumeration
 * guard. */
spancom_status spancom_trees_count(const spancom_graph* g, char** out);

/* JSON reports; see README for the schema. */
spancom_status spancom_report_graph_json(const spancom_graph* g, char** out);
spancom_status spancom_report_closed_json(int n, int m, char** out);

/* Closed-form vs. oracle sweep over 3 <= m <= n <= n_max; *all_pass is set
 * to 1 iff every check matched. */
spancom_status spancom_verify_json(int n_max, int expand_to, int* all_pass,
                                   char** out);

void spancom_string_free(char* s);

const char* spancom_status_name(spancom_status status);

/* Message of the last failure on this thread; empty string if none. */
const char* spancom_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* SPANCOM_H */
