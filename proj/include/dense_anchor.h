/*
 * dense_anchor.h - C API of the dense-anchor library.
 *
 * Discovers dense subgraphs that stay well-connected: exact and greedy
 * densest-subgraph search, vertex/edge connectivity with certificates, and
 * approximation solvers for the densest k-vertex/edge-connected subgraph
 * problems.
 *
 * All handles are opaque; every fallible call returns a da_status and leaves
 * a human-readable message in da_last_error() (thread-local). Strings
 * returned through char** are heap-allocated and must be released with
 * da_string_free(); strings returned as const char* point into the handle
 * and stay valid until it is freed.
 */

#ifndef DENSE_ANCHOR_H
#define DENSE_ANCHOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DA_API __declspec(dllexport)
#else
#define DA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  DA_OK = 0,
  DA_ERROR_INVALID_ARGUMENT = 1,
  DA_ERROR_PARSE = 2,
  DA_ERROR_VALIDATION = 3,
  DA_ERROR_DOMAIN = 4,
  DA_ERROR_OVERFLOW = 5,
  DA_ERROR_BUDGET = 6,
  DA_ERROR_IO = 7,
  DA_ERROR_NOT_FOUND = 8,
  DA_ERROR_INTERNAL = 9
} da_status;

typedef enum {
  DA_WEIGHTS_AUTO = 0,       /* per line: 2 columns -> weight 1, 3 -> parse */
  DA_WEIGHTS_UNWEIGHTED = 1, /* exactly 2 columns */
  DA_WEIGHTS_WEIGHTED = 2    /* exactly 3 columns */
} da_weight_mode;

typedef enum { DA_MODE_VERTEX = 0, DA_MODE_EDGE = 1 } da_problem_mode;

typedef enum { DA_ALGORITHM_BICRITERIA = 0, DA_ALGORITHM_MATULA = 1 } da_algorithm;

typedef struct da_graph da_graph;
typedef struct da_result da_result;
typedef struct da_report da_report;

DA_API const char* da_version(void);

/* Message describing the most recent failure on this thread. */
DA_API const char* da_last_error(void);

/* ---- graphs ---------------------------------------------------------- */

DA_API da_status da_graph_load_path(const char* path, da_weight_mode mode,
                                    da_graph** out);
DA_API da_status da_graph_load_string(const char* text, da_weight_mode mode,
                                      da_graph** out);
DA_API void da_graph_free(da_graph* graph);

DA_API uint32_t da_graph_vertex_count(const da_graph* graph);
DA_API uint64_t da_graph_edge_count(const da_graph* graph);

/* Warnings recorded while loading (duplicate edges with conflicting weights). */
DA_API uint32_t da_graph_warning_count(const da_graph* graph);
DA_API const char* da_graph_warning(const da_graph* graph, uint32_t index);

DA_API const char* da_graph_vertex_label(const da_graph* graph, uint32_t vertex);
DA_API da_status da_graph_vertex_by_label(const da_graph* graph, const char* label,
                                          uint32_t* out);

/* Canonical sorted edge list ("u v w" lines, exact weights). */
DA_API da_status da_graph_export_edgelist(const da_graph* graph, char** out);
/* Graphviz DOT; vertices in highlight[] are drawn filled. */
DA_API da_status da_graph_export_dot(const da_graph* graph,
                                     const uint32_t* highlight,
                                     size_t highlight_len, char** out);
DA_API void da_string_free(char* text);

/* ---- solvers --------------------------------------------------------- */

/* Unconstrained densest subgraph; exact flow-based search or the greedy
 * 1/2-approximation when use_greedy is nonzero. */
DA_API da_status da_densest_subgraph(const da_graph* graph, int use_greedy,
                                     da_result** out);

/* Densest k-connected subgraph solvers. k (and gamma, bicriteria only;
 * pass NULL for matula) are decimal or p/q strings; vertex mode requires an
 * integer k. An INFEASIBLE verdict is a successful call: DA_OK with
 * da_result_feasible() == 0. */
DA_API da_status da_solve(const da_graph* graph, da_problem_mode mode,
                          da_algorithm algorithm, const char* k,
                          const char* gamma, da_result** out);

DA_API int da_result_feasible(const da_result* result);
DA_API size_t da_result_size(const da_result* result);
DA_API da_status da_result_vertices(const da_result* result, uint32_t* buffer,
                                    size_t buffer_len);
/* Exact fraction ("9/2") and two-decimal rendering ("4.50"); empty strings
 * when the field does not apply (infeasible outcome, densest results have no
 * connectivity). */
DA_API const char* da_result_density_fraction(const da_result* result);
DA_API const char* da_result_density_decimal(const da_result* result);
DA_API const char* da_result_connectivity_fraction(const da_result* result);
DA_API const char* da_result_connectivity_decimal(const da_result* result);
DA_API const char* da_result_guarantee_density_ratio(const da_result* result);
DA_API const char* da_result_guarantee_density_ratio_decimal(const da_result* result);
DA_API const char* da_result_guarantee_connectivity_ratio(const da_result* result);
DA_API const char* da_result_guarantee_connectivity_ratio_decimal(const da_result* result);
DA_API const char* da_result_method(const da_result* result);
DA_API void da_result_free(da_result* result);

/* ---- induced-subgraph report ----------------------------------------- */

/* Edge count, density, kappa, lambda and minimum weighted degree of the
 * subgraph induced by vertices[0..len). */
DA_API da_status da_report_compute(const da_graph* graph, const uint32_t* vertices,
                                   size_t len, da_report** out);
DA_API uint64_t da_report_edge_count(const da_report* report);
DA_API const char* da_report_density_fraction(const da_report* report);
DA_API const char* da_report_density_decimal(const da_report* report);
DA_API uint32_t da_report_kappa(const da_report* report);
DA_API const char* da_report_lambda_fraction(const da_report* report);
DA_API const char* da_report_lambda_decimal(const da_report* report);
DA_API const char* da_report_min_degree_fraction(const da_report* report);
DA_API const char* da_report_min_degree_decimal(const da_report* report);
DA_API void da_report_free(da_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DENSE_ANCHOR_H */
