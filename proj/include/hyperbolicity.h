/* C interface to the hyperbolicity library: opaque handles, status codes,
 * JSON strings for structured reports. Every object returned through an
 * out-parameter is owned by the caller and released with the matching
 * _free function. Functions return HYP_OK on success; on failure the
 * out-parameters are untouched and hyp_last_error() carries a message
 * (thread-local). */

#ifndef HYPERBOLICITY_H
#define HYPERBOLICITY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hyp_graph hyp_graph;
typedef struct hyp_result hyp_result;

typedef enum hyp_status {
    HYP_OK = 0,
    HYP_ERR_INVALID_ARGUMENT = 1,
    HYP_ERR_PARSE = 2,
    HYP_ERR_IO = 3,
    HYP_ERR_TOO_LARGE = 4,
    HYP_ERR_INTERNAL = 5
} hyp_status;

unsigned hyp_api_version(void);
const char* hyp_status_name(hyp_status status);
const char* hyp_last_error(void);
void hyp_string_free(char* s);

/* graphs ----------------------------------------------------------------- */

/* edges: 2*edge_count vertex ids (u0,v0,u1,v1,...), all below n */
hyp_status hyp_graph_build(uint32_t n, const uint32_t* edges, size_t edge_count,
                           hyp_graph** out);
/* edge-list text: "u v" lines, '#' comments, optional "p n m" header */
hyp_status hyp_graph_parse(const char* text, hyp_graph** out);
hyp_status hyp_graph_read_file(const char* path, hyp_graph** out);
hyp_status hyp_graph_write_edge_list(const hyp_graph* g, char** text_out);
uint32_t hyp_graph_vertex_count(const hyp_graph* g);
uint64_t hyp_graph_edge_count(const hyp_graph* g);
void hyp_graph_free(hyp_graph* g);

/* algorithms ------------------------------------------------------------- */

typedef enum hyp_algorithm {
    HYP_ALGO_BRUTE = 0,
    HYP_ALGO_PATHS = 1,
    HYP_ALGO_FEEDBACK_EDGE = 2,
    HYP_ALGO_DEGREE3 = 3,
    HYP_ALGO_VERTEX_COVER = 4,
    HYP_ALGO_COGRAPH = 5
} hyp_algorithm;

typedef struct hyp_options {
    uint32_t threads;           /* 0 = single-threaded */
    uint64_t max_matrix_bytes;  /* 0 = default cap for the oracle's table */
} hyp_options;

void hyp_options_init(hyp_options* opts);

hyp_status hyp_compute(const hyp_graph* g, hyp_algorithm algorithm, const hyp_options* opts,
                       hyp_result** out);
int64_t hyp_result_delta(const hyp_result* r);
/* 1 when a witness quadruple exists (written to out[0..3]), else 0 */
int hyp_result_witness(const hyp_result* r, uint32_t out[4]);
/* RunReport JSON: schema, algorithm, delta, witness, parameters, wall_ms */
hyp_status hyp_result_report_json(const hyp_result* r, char** json_out);
void hyp_result_free(hyp_result* r);

/* reductions ------------------------------------------------------------- */

/* rules: comma-separated subset of "1,2,3", applied in the given order */
hyp_status hyp_reduce(const hyp_graph* g, const char* rules, hyp_graph** reduced_out,
                      char** trace_json_out);

/* Debug view of the path engine: JSON array with the greedy cover and up to
 * max_models of the case ILPs built on the largest component after the
 * degree-one reduction, for cross-checking against a placement oracle. */
hyp_status hyp_path_engine_debug_json(const hyp_graph* g, size_t max_models, char** json_out);

/* generators ------------------------------------------------------------- */

/* family: ov | 4is | cycle | tree | gnp | theta
 * params_json per family:
 *   ov:    {"n":8,"ell":8,"force_no":false}
 *   4is:   {"parts":[2,3,1,1],"p":0.4}
 *   cycle: {"length":9}
 *   tree:  {"n":30}
 *   gnp:   {"n":20,"p":0.1}
 *   theta: {"lengths":[2,3,4]}
 * sidecar JSON reports landmarks / ground truth / seed. */
hyp_status hyp_generate(const char* family, const char* params_json, uint64_t seed,
                        hyp_graph** graph_out, char** sidecar_json_out);

#ifdef __cplusplus
}
#endif

#endif /* HYPERBOLICITY_H */
