/* ssnet - rank-ordered self-similar network toolkit, C interface.
 *
 * Every fallible call returns ssn_status; SSN_OK is 0. On failure,
 * ssn_last_error() returns a thread-local message describing the most recent
 * failing call on this thread. Objects returned through ** out-parameters are
 * owned by the caller and released with the matching *_free function. Strings
 * returned through char** are released with ssn_string_free.
 */
#ifndef SSNET_H
#define SSNET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ssn_status {
  SSN_OK = 0,
  SSN_E_BAD_ARGUMENT = 1,
  SSN_E_DIGIT_OUT_OF_RANGE = 2,
  SSN_E_BASE_TOO_SMALL = 3,
  SSN_E_RANK_OUT_OF_RANGE = 4,
  SSN_E_BAD_EXPONENT = 5,
  SSN_E_BELOW_SUPPORT = 6,
  SSN_E_RATIO_NOT_ABOVE_ONE = 7,
  SSN_E_COUNT_OUT_OF_RANGE = 8,
  SSN_E_NO_SIGN_CHANGE = 9,
  SSN_E_NON_FINITE = 10,
  SSN_E_INVALID_GROUP_SIZE = 11,
  SSN_E_INVALID_INDEX = 12,
  SSN_E_NO_SOLUTION = 13,
  SSN_E_BAD_FRACTION = 14,
  SSN_E_INVALID_RANK = 15,
  SSN_E_RANK_OUT_OF_SUPPORT = 16,
  SSN_E_PARTITION_OVERRUN = 17,
  SSN_E_TOP_DEGREE_EXCEEDS_N = 18,
  SSN_E_UNREPAIRABLE = 19,
  SSN_E_NOT_GRAPHICAL = 20,
  SSN_E_BAD_DEPTH = 21,
  SSN_E_NON_CONSECUTIVE = 22,
  SSN_E_EMPTY_INPUT = 23,
  SSN_E_DEGENERATE_INPUT = 24,
  SSN_E_TOO_SHORT = 25,
  SSN_E_NON_POSITIVE = 26,
  SSN_E_SUPPORT_MISMATCH = 27,
  SSN_E_DISCONNECTED = 28,
  SSN_E_BAD_RANGE = 29,
  SSN_E_IO = 30,
  SSN_E_PARSE = 31,
  SSN_E_INTERNAL = 32
} ssn_status;

const char* ssn_status_name(ssn_status status);
const char* ssn_last_error(void);
const char* ssn_version(void);
void ssn_string_free(char* s);
void ssn_doubles_free(double* values);

typedef struct ssn_geom_model ssn_geom_model;
typedef struct ssn_block_model ssn_block_model;
typedef struct ssn_degree_seq ssn_degree_seq;
typedef struct ssn_graph ssn_graph;
typedef struct ssn_evolution ssn_evolution;

/* ---------- distributions ---------- */

/* log_base(1 + 1/digit) for digit in 1..base-1 */
ssn_status ssn_benford_pmf(int digit, int base, double* out);
/* (1/rank)/H_n */
ssn_status ssn_zipf_pmf_harmonic(uint64_t rank, uint64_t n, double* out);
/* top/rank, so rank 1 evaluates to top */
ssn_status ssn_zipf_pmf_top_match(uint64_t rank, uint64_t n, double top, double* out);
/* rank^-lambda over m..k_max, optionally normalized to sum 1 */
ssn_status ssn_power_law_pmf(uint64_t rank, double lambda, uint64_t m, uint64_t k_max,
                             int normalized, double* out);
/* alpha * x_min^alpha / x^(alpha+1) */
ssn_status ssn_pareto_density(double x, double alpha, double x_min, double* out);
/* top * (ratio - ratio^(1-n)) / (ratio - 1), and its n -> infinity limit */
ssn_status ssn_aggregate_connectivity(double top, double ratio, uint64_t node_count, double* out);
ssn_status ssn_aggregate_connectivity_infinite(double top, double ratio, double* out);
/* derivative -1/(ratio-1)^2 of the normalized infinite aggregate */
ssn_status ssn_aggregate_sensitivity(double ratio, double* out);

/* frequency tables; out receives count values for ranks/digits 1..count */
ssn_status ssn_table_benford(int base, uint64_t count, double* out);
ssn_status ssn_table_zipf_harmonic(uint64_t n, uint64_t count, double* out);
ssn_status ssn_table_zipf_top_match(uint64_t n, double top, uint64_t count, double* out);
ssn_status ssn_table_power_law(double lambda, uint64_t m, uint64_t k_max, int normalized,
                               uint64_t count, double* out);

/* ---------- geometric rank model ---------- */

ssn_status ssn_geom_model_new(double top, double ratio, uint64_t node_count,
                              ssn_geom_model** out);
ssn_status ssn_geom_model_new_infinite(double top, double ratio, ssn_geom_model** out);
void ssn_geom_model_free(ssn_geom_model* model);

ssn_status ssn_geom_pmf(const ssn_geom_model* model, uint64_t rank, double* out);
ssn_status ssn_geom_nominal_degree(const ssn_geom_model* model, uint64_t rank, double* out);
ssn_status ssn_geom_aggregate(const ssn_geom_model* model, double* out);
/* normalized: pmf values; otherwise the unit-leading series ratio^-(rank-1) */
ssn_status ssn_geom_table(const ssn_geom_model* model, int normalized, uint64_t count,
                          double* out);
ssn_status ssn_geom_quantize(const ssn_geom_model* model, ssn_degree_seq** out);

/* ---------- scaling-factor solvers ---------- */

typedef struct ssn_root {
  double value;
  double residual;
  int iterations;
} ssn_root;

/* root of 1 = sum_{i=1..group_size} a^-i */
ssn_status ssn_solve_block_ratio(int group_size, ssn_root* out);
/* root of the dyadic block-pair balance; equals phi^(2^(1-pair_index)) */
ssn_status ssn_solve_block_pair(int pair_index, ssn_root* out);
/* decay ratio putting mass_frac of the connectivity on the top
 * ceil(top_frac * node_count) ranks */
ssn_status ssn_solve_pareto_ratio(uint64_t node_count, double top_frac, double mass_frac,
                                  int infinite_aggregate, ssn_root* out);

/* ---------- block-equal-mass models ---------- */

#define SSN_WITHIN_UNIFORM 0
#define SSN_WITHIN_GEOMETRIC_RENORMALIZED 1

ssn_status ssn_block_model_new(int branching, int blocks, int within_mode,
                               ssn_block_model** out);
void ssn_block_model_free(ssn_block_model* model);
uint64_t ssn_block_model_support(const ssn_block_model* model);
ssn_status ssn_block_pmf(const ssn_block_model* model, uint64_t rank, double* out);
/* out receives one mass per block */
ssn_status ssn_block_mass_vector(const ssn_block_model* model, double* out);
ssn_status ssn_block_index(uint64_t rank, int branching, int* out);
/* ratio^-group_size, the self-similarity factor of grouped partial sums */
ssn_status ssn_group_sum_ratio(double ratio, int group_size, double* out);

typedef struct ssn_dominance_row {
  uint64_t group;        /* 1-indexed position in the partition */
  double group_mass;
  double successor_mass; /* mass of the next 2*size ranks */
  int outcome;           /* 1 dominates, 0 equal within 1e-12, -1 below */
} ssn_dominance_row;

/* rows must hold group_count entries; *row_count receives the number used */
ssn_status ssn_misaligned_dominance(const double* values, size_t value_count,
                                    const size_t* partition, size_t group_count,
                                    ssn_dominance_row* rows, size_t* row_count);

/* ---------- degree sequences and graphs ---------- */

/* degrees must be non-increasing */
ssn_status ssn_degree_seq_new(const uint32_t* degrees, size_t count, ssn_degree_seq** out);
void ssn_degree_seq_free(ssn_degree_seq* seq);
size_t ssn_degree_seq_size(const ssn_degree_seq* seq);
uint64_t ssn_degree_seq_sum(const ssn_degree_seq* seq);
/* out receives size entries */
ssn_status ssn_degree_seq_values(const ssn_degree_seq* seq, uint32_t* out);
/* 1 when the Erdos-Gallai conditions hold, else 0 */
int ssn_degree_seq_is_graphical(const ssn_degree_seq* seq);
/* minimal increment-only repair to a graphical sequence */
ssn_status ssn_degree_seq_repair(const ssn_degree_seq* seq, ssn_degree_seq** out);
/* deterministic Havel-Hakimi realization */
ssn_status ssn_degree_seq_realize(const ssn_degree_seq* seq, ssn_graph** out);

void ssn_graph_free(ssn_graph* graph);
uint32_t ssn_graph_node_count(const ssn_graph* graph);
uint64_t ssn_graph_edge_count(const ssn_graph* graph);
/* edges are sorted, 1-indexed, u < v */
ssn_status ssn_graph_edge(const ssn_graph* graph, uint64_t index, uint32_t* u, uint32_t* v);
/* out receives node_count entries, indexed by node id - 1 */
ssn_status ssn_graph_degrees(const ssn_graph* graph, uint32_t* out);
/* degrees sorted non-increasing */
ssn_status ssn_graph_degree_sequence(const ssn_graph* graph, ssn_degree_seq** out);
/* mean shortest-path length over all node pairs */
ssn_status ssn_graph_path_length(const ssn_graph* graph, double* out);
uint32_t ssn_graph_component_count(const ssn_graph* graph);
ssn_status ssn_graph_largest_component(const ssn_graph* graph, ssn_graph** out);

/* edge-list text: "u<TAB>v" per line, 1-indexed, u < v, sorted */
ssn_status ssn_graph_edge_list_string(const ssn_graph* graph, char** out);
ssn_status ssn_graph_write_edge_list(const ssn_graph* graph, const char* path);
ssn_status ssn_graph_read_edge_list(const char* path, ssn_graph** out);

/* degree CSV: "rank,degree" header, ranks ascending from 1 */
ssn_status ssn_degree_csv_string(const double* degrees, size_t count, char** out);
ssn_status ssn_degree_seq_csv_string(const ssn_degree_seq* seq, char** out);
ssn_status ssn_read_degree_csv(const char* path, double** values, size_t* count);

/* ---------- two-mode evolution ---------- */

/* stage 1 uses mode_a at initial_depth; later stages alternate modes */
ssn_status ssn_evolve(uint32_t mode_a, uint32_t mode_b, uint32_t stages,
                      uint32_t initial_depth, ssn_evolution** out);
void ssn_evolution_free(ssn_evolution* evolution);
uint32_t ssn_evolution_stage_count(const ssn_evolution* evolution);
/* stages are 1-indexed; any output pointer may be NULL */
ssn_status ssn_stage_info(const ssn_evolution* evolution, uint32_t stage, uint32_t* mode,
                          uint32_t* depth, uint64_t* node_count, uint64_t* total_connections);
ssn_status ssn_stage_layer_count(const ssn_evolution* evolution, uint32_t stage, uint32_t* out);
ssn_status ssn_stage_layer(const ssn_evolution* evolution, uint32_t stage, uint32_t layer,
                           uint64_t* node_lo, uint64_t* node_hi, uint64_t* degree);
ssn_status ssn_stage_degree_sequence(const ssn_evolution* evolution, uint32_t stage,
                                     ssn_degree_seq** out);
/* realizes the stage, repairing the table first when it is unrealizable;
 * any output pointer may be NULL */
ssn_status ssn_stage_realize(const ssn_evolution* evolution, uint32_t stage, int* repaired,
                             uint64_t* theoretical_total, uint64_t* actual_total,
                             ssn_degree_seq** actual, ssn_graph** graph);
/* per-node degree change from stage to stage+1; deltas must hold the earlier
 * stage's node count. New nodes are first_new_node .. first_new_node +
 * new_node_count - 1. */
ssn_status ssn_transition_deltas(const ssn_evolution* evolution, uint32_t stage,
                                 int64_t* deltas, uint64_t* first_new_node,
                                 uint64_t* new_node_count);
/* layer-0 over layer-1 degree per stage plus their mean */
ssn_status ssn_second_level_ratio(const ssn_evolution* evolution, double* per_stage,
                                  double* mean);
ssn_status ssn_next_depth(uint64_t prev_top_degree, uint32_t r, uint32_t* out);

/* ---------- similarity analysis ---------- */

typedef struct ssn_geometric_fit {
  double top;
  double ratio;
  double goodness;
  size_t n;
} ssn_geometric_fit;

typedef struct ssn_power_law_fit {
  double exponent;
  double goodness;
  size_t n;
} ssn_power_law_fit;

ssn_status ssn_fit_geometric(const double* degrees, size_t count, ssn_geometric_fit* out);
ssn_status ssn_fit_power_law(const double* degrees, size_t count, ssn_power_law_fit* out);
/* mean relative gap to the geometric / harmonic mean of the neighbours */
ssn_status ssn_midterm_deviation(const double* values, size_t count, double* geometric,
                                 double* harmonic);
ssn_status ssn_pareto_share(const double* degrees, size_t count, double top_frac, double* out);
ssn_status ssn_tv_distance(const double* p, const double* q, size_t count, double* out);
/* frequencies must hold base - 1 entries */
ssn_status ssn_benford_mixture_sim(uint64_t processes, uint64_t max_range, uint64_t seed,
                                   int base, double* frequencies);

#ifdef __cplusplus
}
#endif

#endif /* SSNET_H */
