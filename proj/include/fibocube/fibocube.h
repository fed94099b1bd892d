/*
 * C interface to the fibocube library: classification of binary strings as
 * good or bad for generalized Fibonacci cubes Q_d(f), the brute-force
 * isometry oracle, verification sweeps and graph export.
 *
 * Every function returns an fc_status. On failure a human-readable message
 * is available from fc_last_error() on the calling thread. Strings returned
 * through char** out-parameters are owned by the caller and must be released
 * with fc_string_free(). Handles are released with their matching _free().
 */
#ifndef FIBOCUBE_H
#define FIBOCUBE_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(FIBOCUBE_BUILDING)
#    define FC_API __declspec(dllexport)
#  else
#    define FC_API __declspec(dllimport)
#  endif
#else
#  define FC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
  FC_OK = 0,
  FC_ERR_INVALID_ARGUMENT = 1,
  FC_ERR_CAP_EXCEEDED = 2,
  FC_ERR_INTERNAL = 3
} fc_status;

typedef enum fc_format {
  FC_FORMAT_TEXT = 0,
  FC_FORMAT_JSON = 1,
  FC_FORMAT_CSV = 2,
  FC_FORMAT_DOT = 3
} fc_format;

typedef struct fc_config fc_config;
typedef struct fc_classification fc_classification;
typedef struct fc_graph fc_graph;

FC_API const char* fc_version(void);
FC_API const char* fc_last_error(void);
FC_API void fc_string_free(char* s);

/* Run configuration. Defaults: dimension cap 25, one worker per hardware
 * thread. */
FC_API fc_status fc_config_new(fc_config** out);
FC_API void fc_config_free(fc_config* cfg);
FC_API fc_status fc_config_set_dimension_cap(fc_config* cfg, int cap);
FC_API fc_status fc_config_set_workers(fc_config* cfg, int workers);
FC_API int fc_config_dimension_cap(const fc_config* cfg);
FC_API int fc_config_workers(const fc_config* cfg);

/* Structural classification of a pattern given as '0'/'1' text. */
FC_API fc_status fc_classify(const char* pattern, fc_classification** out);
FC_API void fc_classification_free(fc_classification* c);
FC_API int fc_classification_is_bad(const fc_classification* c);
/* B(f) for bad patterns, 0 for good ones. */
FC_API int fc_classification_index(const fc_classification* c);
FC_API size_t fc_classification_witness_count(const fc_classification* c);
FC_API fc_status fc_classification_witness_json(const fc_classification* c, size_t i, char** out);
/* FC_FORMAT_TEXT or FC_FORMAT_JSON. */
FC_API fc_status fc_classification_render(const fc_classification* c, fc_format format, char** out);

/* Witness certificates in their JSON form. *ok receives 1 when the witness
 * re-verifies; *reason (may be NULL) receives the failure code name. */
FC_API fc_status fc_witness_verify(const char* witness_json, int* ok, char** reason);
FC_API fc_status fc_witness_lift(const char* witness_json, int dimension, char** out);

/* Brute-force index: *bad = 1 and *index = B(f), or *bad = 0. */
FC_API fc_status fc_index_bruteforce(const char* pattern, const fc_config* cfg, int* bad, int* index);

FC_API fc_status fc_graph_build(const char* pattern, int dimension, const fc_config* cfg, fc_graph** out);
FC_API void fc_graph_free(fc_graph* g);
FC_API size_t fc_graph_vertex_count(const fc_graph* g);
/* *distance receives -1 when b is unreachable from a. */
FC_API fc_status fc_graph_distance(const fc_graph* g, const char* a, const char* b, int* distance);
FC_API fc_status fc_graph_is_isometric(const fc_graph* g, const fc_config* cfg, int* isometric);
/* FC_FORMAT_DOT or FC_FORMAT_JSON. */
FC_API fc_status fc_graph_render(const fc_graph* g, fc_format format, char** out);

/* FC_FORMAT_DOT or FC_FORMAT_JSON. */
FC_API fc_status fc_overlap_graph_render(int r, int s, fc_format format, char** out);

/* One census row; FC_FORMAT_TEXT, FC_FORMAT_JSON or FC_FORMAT_CSV (with
 * header line). */
FC_API fc_status fc_census(int length, const fc_config* cfg, fc_format format, char** out);

/* Runs a verification suite: all, p-values, index-bound, doubling,
 * monotonicity, lemma21, cross or periodicity. JSON output is one report
 * per line. *all_pass receives 1 when every report passed. */
FC_API fc_status fc_verify(const char* suite, int max_len, const fc_config* cfg, fc_format format,
                           char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* FIBOCUBE_H */
