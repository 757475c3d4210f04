/*
 * fsp.h: C interface to the Flip-Schelling toolkit.
 *
 * Every function returns an fsp_status; on failure fsp_last_error() gives a
 * message for the calling thread. Handles are opaque and owned by the caller,
 * who releases them with the matching *_free function (NULL is accepted).
 */
#ifndef FSP_FSP_H
#define FSP_FSP_H

#include <stddef.h>
#include <stdint.h>

#if defined(FSP_BUILDING_LIBRARY)
#define FSP_API __attribute__((visibility("default")))
#else
#define FSP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fsp_status {
    FSP_OK = 0,
    FSP_ERR_PARAMETER = 1,
    FSP_ERR_DOMAIN = 2,
    FSP_ERR_CAPACITY = 3,
    FSP_ERR_IO = 4,
    FSP_ERR_INTERNAL = 5
} fsp_status;

typedef enum fsp_model { FSP_MODEL_RGG = 0, FSP_MODEL_ER = 1 } fsp_model;

typedef struct fsp_graph fsp_graph;
typedef struct fsp_config fsp_config;
typedef struct fsp_records fsp_records;
typedef struct fsp_summary fsp_summary;

FSP_API const char* fsp_version(void);
FSP_API const char* fsp_last_error(void);
FSP_API const char* fsp_status_name(fsp_status status);

/* ---- graphs ------------------------------------------------------------ */

FSP_API fsp_status fsp_radius_for_degree(uint64_t n, double avg_degree, double* radius);
FSP_API fsp_status fsp_er_probability_for_degree(uint64_t n, double avg_degree, double* p);

/* Stream origin is (seed, context, trial). */
FSP_API fsp_status fsp_graph_generate(fsp_model model, uint64_t n, double avg_degree, uint64_t seed,
                                      const char* context, uint64_t trial, fsp_graph** out);
/* pairs holds 2*edge_count vertex indices. */
FSP_API fsp_status fsp_graph_from_edges(uint64_t n, const uint32_t* pairs, size_t edge_count, fsp_graph** out);
FSP_API void fsp_graph_free(fsp_graph* graph);
FSP_API fsp_status fsp_graph_vertex_count(const fsp_graph* graph, uint64_t* n);
FSP_API fsp_status fsp_graph_edge_count(const fsp_graph* graph, uint64_t* m);
/* Sorted "u v" lines. */
FSP_API fsp_status fsp_graph_write_edge_list(const fsp_graph* graph, const char* path);

/* ---- exact oracles on small graphs (n <= 16) ---------------------------- */

FSP_API fsp_status fsp_exact_monochrome_probability(const fsp_graph* graph, uint32_t u, uint32_t v,
                                                    double* probability);
FSP_API fsp_status fsp_exact_decisiveness_probability(const fsp_graph* graph, uint32_t u, uint32_t v,
                                                      double* probability);

/* ---- exact math --------------------------------------------------------- */

typedef struct fsp_rw_probs {
    double less;    /* P(|A| < |B|) */
    double equal;   /* P(|A| = |B|) */
    double greater; /* P(|A| > |B|) */
} fsp_rw_probs;

typedef enum fsp_rw_outcome { FSP_RW_LESS = 0, FSP_RW_EQUAL = 1, FSP_RW_GREATER = 2 } fsp_rw_outcome;

FSP_API fsp_status fsp_rw_abs_compare(uint64_t a, uint64_t b, fsp_rw_probs* out);
/* Writes the reduced fraction "num/den" (NUL-terminated). *required receives
 * the buffer size needed, including the terminator; FSP_ERR_CAPACITY when
 * capacity is too small. */
FSP_API fsp_status fsp_rw_abs_compare_fraction(uint64_t a, uint64_t b, fsp_rw_outcome which, char* buffer,
                                               size_t capacity, size_t* required);
FSP_API fsp_status fsp_rw_lower_bound(uint64_t a, uint64_t b, double* out);

typedef struct fsp_region_measures {
    double mu_common;
    double mu_u_exclusive;
    double mu_v_exclusive;
    double mu_outside;
    double tau;
} fsp_region_measures;

FSP_API fsp_status fsp_region_measures_compute(uint64_t n, double avg_degree, double tau,
                                               fsp_region_measures* out);
FSP_API fsp_status fsp_edge_within_tau_fraction(double tau, double* out);

/* asymptotic_factor_dropped is always 1: the (1 - o(1)) factor is not applied. */
FSP_API fsp_status fsp_theorem1_bound(double avg_degree, double* bound, int* asymptotic_factor_dropped);
FSP_API fsp_status fsp_er_common_empty_probability(uint64_t n, double p, double* exact, double* bound);

FSP_API fsp_status fsp_binom_pmf(uint64_t n, double p, uint64_t k, double* out);
FSP_API fsp_status fsp_binomial_mode(uint64_t n, double p, uint64_t* out);
/* ge = P(X >= Y), gt = P(X > Y), eq = P(X = Y). */
FSP_API fsp_status fsp_binom_ge_prob(uint64_t n, double p, double q, double* ge, double* gt, double* eq);
FSP_API fsp_status fsp_binom_collision_upper_bound(uint64_t n, double p, double* out);
FSP_API fsp_status fsp_prob_gt_one_and_bound(uint64_t n, double p, double* exact, double* bound);

/* ---- experiments -------------------------------------------------------- */

FSP_API fsp_status fsp_config_create(fsp_config** out);
FSP_API void fsp_config_free(fsp_config* config);
FSP_API fsp_status fsp_config_set_models(fsp_config* config, const fsp_model* models, size_t count);
FSP_API fsp_status fsp_config_set_n_values(fsp_config* config, const uint64_t* values, size_t count);
FSP_API fsp_status fsp_config_set_degrees(fsp_config* config, const double* values, size_t count);
FSP_API fsp_status fsp_config_set_trials(fsp_config* config, uint64_t trials);
FSP_API fsp_status fsp_config_set_seed(fsp_config* config, uint64_t seed);
FSP_API fsp_status fsp_config_set_threads(fsp_config* config, unsigned threads);
FSP_API fsp_status fsp_config_set_timing(fsp_config* config, int enabled);
/* NULL or "" disables graph dumps. */
FSP_API fsp_status fsp_config_set_dump_dir(fsp_config* config, const char* directory);

FSP_API fsp_status fsp_experiment_run(const fsp_config* config, fsp_records** out);
FSP_API void fsp_records_free(fsp_records* records);
FSP_API fsp_status fsp_records_read_csv(const char* path, fsp_records** out);

/* Fields that are undefined for a record are reported as NaN. */
typedef struct fsp_trial_record {
    fsp_model model;
    uint64_t n;
    double avg_degree;
    uint64_t trial;
    uint64_t seed;
    double frac_before;
    double frac_after;
    double empirical_avg_degree;
    double wall_time_ms;
    int has_error;
} fsp_trial_record;

FSP_API fsp_status fsp_records_count(const fsp_records* records, size_t* count);
FSP_API fsp_status fsp_records_get(const fsp_records* records, size_t index, fsp_trial_record* out);
/* Message of an error row; "" for normal rows. Valid until the records are freed. */
FSP_API fsp_status fsp_records_error_message(const fsp_records* records, size_t index, const char** message);
FSP_API fsp_status fsp_records_write_csv(const fsp_records* records, const char* path);

FSP_API fsp_status fsp_summarize(const fsp_records* records, fsp_summary** out);
FSP_API void fsp_summary_free(fsp_summary* summary);

typedef struct fsp_summary_row {
    fsp_model model;
    uint64_t n;
    double avg_degree;
    uint64_t trials;
    double mean_before;
    double mean_after;
    double median_after;
    double q25_after;
    double q75_after;
} fsp_summary_row;

FSP_API fsp_status fsp_summary_count(const fsp_summary* summary, size_t* count);
FSP_API fsp_status fsp_summary_get(const fsp_summary* summary, size_t index, fsp_summary_row* out);
/* Warnings about omitted cells. */
FSP_API fsp_status fsp_summary_warning_count(const fsp_summary* summary, size_t* count);
FSP_API fsp_status fsp_summary_warning(const fsp_summary* summary, size_t index, const char** message);
FSP_API fsp_status fsp_summary_write_csv(const fsp_summary* summary, const char* path);
FSP_API fsp_status fsp_summary_write_plot_data(const fsp_summary* summary, const char* path);

/* ---- property sweeps ---------------------------------------------------- */

typedef void (*fsp_check_callback)(const char* name, int passed, const char* detail, void* user);

/* Runs every sweep, reporting each through callback (may be NULL);
 * *failures receives the number of failing checks. */
FSP_API fsp_status fsp_verify(fsp_check_callback callback, void* user, size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* FSP_FSP_H */
