#ifndef PDLAB_H
#define PDLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PDL_API
#elif defined(PDLAB_BUILDING_LIBRARY)
#define PDL_API __attribute__((visibility("default")))
#else
#define PDL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdl_status {
  PDL_OK = 0,
  PDL_ERR_INVALID_ARGUMENT = 1,
  PDL_ERR_PARSE = 2,
  PDL_ERR_CAP_EXCEEDED = 3,
  PDL_ERR_PRECONDITION = 4,
  PDL_ERR_IO = 5,
  PDL_ERR_UNKNOWN_NAME = 6,
  PDL_ERR_INTERNAL = 7
} pdl_status;

typedef struct pdl_graph pdl_graph;
typedef struct pdl_result pdl_result;
typedef struct pdl_trace pdl_trace;
typedef struct pdl_report pdl_report;

typedef struct pdl_options {
  unsigned threads;    /* 0 or 1: single worker */
  int prune_dominated; /* gamma and gamma-p only */
} pdl_options;

typedef struct pdl_harness_options {
  size_t max_n;  /* 0: per-suite default */
  unsigned threads;
  uint64_t seed;
} pdl_harness_options;

PDL_API const char* pdl_version(void);
PDL_API const char* pdl_status_name(pdl_status status);

/* Message of the last failed call on this thread; "" if none. */
PDL_API const char* pdl_last_error(void);

/* Frees every char* returned through an out parameter. */
PDL_API void pdl_string_free(char* s);

/* Graphs */
PDL_API pdl_status pdl_graph_parse(const char* source, pdl_graph** out);
/* endpoints holds 2 * edge_count vertex ids. */
PDL_API pdl_status pdl_graph_from_edges(size_t n, const uint32_t* endpoints, size_t edge_count,
                                        pdl_graph** out);
/* kind: mu, shadow, central, middle */
PDL_API pdl_status pdl_graph_transform(const pdl_graph* g, const char* kind, pdl_graph** out);
PDL_API pdl_status pdl_graph_product(const pdl_graph* a, const pdl_graph* b, pdl_graph** out);
PDL_API size_t pdl_graph_order(const pdl_graph* g);
PDL_API size_t pdl_graph_size(const pdl_graph* g);
/* format: g6, edges, dot */
PDL_API pdl_status pdl_graph_emit(const pdl_graph* g, const char* format, char** out);
/* "key: value" lines describing structure and the characterizations. */
PDL_API pdl_status pdl_graph_info(const pdl_graph* g, char** out);
PDL_API void pdl_graph_free(pdl_graph* g);

/* Invariants: gamma-p, zf, gamma, edge-gamma, path-cover, spider */
PDL_API pdl_status pdl_compute(const pdl_graph* g, const char* invariant, const pdl_options* opts,
                               pdl_result** out);
PDL_API size_t pdl_result_value(const pdl_result* r);
PDL_API uint64_t pdl_result_tested(const pdl_result* r);
PDL_API double pdl_result_millis(const pdl_result* r);
PDL_API pdl_status pdl_result_witness(const pdl_result* r, char** out);
PDL_API void pdl_result_free(pdl_result* r);

/* mode: closure (zero forcing) or monitor (power domination);
   set: comma-separated vertex ids. */
PDL_API pdl_status pdl_trace_run(const pdl_graph* g, const char* mode, const char* set, pdl_trace** out);
PDL_API int pdl_trace_complete(const pdl_trace* t);
PDL_API pdl_status pdl_trace_final(const pdl_trace* t, char** out);
/* format: text, dot */
PDL_API pdl_status pdl_trace_render(const pdl_trace* t, const char* format, char** out);
PDL_API void pdl_trace_free(pdl_trace* t);

/* Harness. suites: "all", "gating", or a comma-separated list of ids. */
PDL_API pdl_status pdl_suite_list(char** out);
PDL_API pdl_status pdl_verify(const char* suites, const pdl_harness_options* opts, pdl_report** out);
/* scan: conjecture, sandwich, small-order. g6_path may be NULL for the
   default corpus; otherwise one graph6 line per graph. */
PDL_API pdl_status pdl_scan(const char* scan, const char* g6_path, const pdl_harness_options* opts,
                            pdl_report** out);
/* format: text, csv */
PDL_API pdl_status pdl_report_render(const pdl_report* r, const char* format, int timing, int quiet,
                                     char** out);
PDL_API int pdl_report_gating_failed(const pdl_report* r);
PDL_API size_t pdl_report_case_count(const pdl_report* r);
PDL_API size_t pdl_report_failure_count(const pdl_report* r);
PDL_API void pdl_report_free(pdl_report* r);

#ifdef __cplusplus
}
#endif

#endif
