/*
 * C interface to the chase-and-escape TSP solver.
 *
 * All objects are opaque handles created by ce_*_load / ce_*_run style calls
 * and released with the matching ce_*_free. Every fallible call returns a
 * ce_status; on failure ce_last_error() describes the problem for the calling
 * thread until its next failing call.
 */
#ifndef CHASE_ESCAPE_H
#define CHASE_ESCAPE_H

#include <stddef.h>
#include <stdint.h>

#if defined(CE_BUILDING_LIBRARY)
#  define CE_API __attribute__((visibility("default")))
#else
#  define CE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ce_status {
    CE_OK = 0,
    CE_ERR_VALIDATION = 1,
    CE_ERR_DOMAIN = 2,
    CE_ERR_PARSE = 3,
    CE_ERR_INTEGRITY = 4,
    CE_ERR_UNSUPPORTED = 5,
    CE_ERR_SIZE = 6,
    CE_ERR_IO = 7,
    CE_ERR_CONFIG = 8,
    CE_ERR_CAUGHT = 9,
    CE_ERR_CONTRACT = 10,
    CE_ERR_NULL_ARGUMENT = 11,
    CE_ERR_BUFFER_TOO_SMALL = 12,
    CE_ERR_INTERNAL = 99
} ce_status;

typedef enum ce_metric { CE_METRIC_REAL = 0, CE_METRIC_ROUNDED = 1 } ce_metric;

typedef enum ce_algorithm { CE_ALGO_CHASE_ESCAPE = 0, CE_ALGO_SIMPLE = 1 } ce_algorithm;

typedef struct ce_instance ce_instance;
typedef struct ce_tour ce_tour;
typedef struct ce_trial ce_trial;
typedef struct ce_bench ce_bench;

/* Tunables for both algorithms. Fill with ce_config_default first. */
typedef struct ce_config {
    uint64_t budget;             /* max cost evaluations per run */
    uint32_t r;                  /* cities permuted on a catch / restart */
    uint64_t seed;               /* run seed; benchmark trial i uses seed + i */
    ce_metric metric;
    uint32_t post_catch_descent; /* chase-escape only */
    int chaser_noop_allowed;     /* chase-escape only; nonzero enables */
    uint64_t stuck_threshold;    /* simple only; 0 selects N*(N-1)/2 */
} ce_config;

CE_API const char* ce_version(void);
CE_API const char* ce_last_error(void);
CE_API const char* ce_status_string(ce_status status);
CE_API void ce_config_default(ce_config* config);

/* Instances (TSPLIB EUC_2D). */
CE_API ce_status ce_instance_load(const char* path, ce_instance** out);
CE_API ce_status ce_instance_parse(const char* text, ce_instance** out);
CE_API void ce_instance_free(ce_instance* instance);
CE_API size_t ce_instance_size(const ce_instance* instance);
/* Owned by the handle. */
CE_API const char* ce_instance_name(const ce_instance* instance);

/* Tours. Indices are 0-based. */
CE_API ce_status ce_tour_load(const char* path, size_t n, ce_tour** out);
CE_API ce_status ce_tour_from_array(const int32_t* order, size_t n, ce_tour** out);
CE_API void ce_tour_free(ce_tour* tour);
CE_API size_t ce_tour_size(const ce_tour* tour);
/* Copies min(capacity, size) indices into `order`. */
CE_API ce_status ce_tour_copy(const ce_tour* tour, int32_t* order, size_t capacity);
CE_API ce_status ce_tour_save(const ce_tour* tour, const char* name, const char* path);
CE_API ce_status ce_tour_cost(const ce_instance* instance, const ce_tour* tour, ce_metric metric,
                              double* cost);

/* Exhaustive optimum; refuses instances above 11 cities with CE_ERR_SIZE. */
CE_API ce_status ce_oracle(const ce_instance* instance, ce_metric metric, double* cost, ce_tour** tour);

/* Single runs. */
CE_API ce_status ce_solve(const ce_instance* instance, ce_algorithm algorithm, const ce_config* config,
                          ce_trial** out);
CE_API void ce_trial_free(ce_trial* trial);
CE_API double ce_trial_best_cost(const ce_trial* trial);
CE_API uint64_t ce_trial_evaluations(const ce_trial* trial);
CE_API uint64_t ce_trial_catches(const ce_trial* trial);
CE_API double ce_trial_wall_time(const ce_trial* trial);
CE_API uint64_t ce_trial_seed(const ce_trial* trial);
CE_API ce_status ce_trial_best_tour(const ce_trial* trial, ce_tour** out);

/* Repeated trials; the result does not depend on `parallelism`. */
CE_API ce_status ce_bench_run(const ce_instance* instance, ce_algorithm algorithm, const ce_config* config,
                              size_t trials, size_t parallelism, ce_bench** out);
CE_API void ce_bench_free(ce_bench* bench);
CE_API size_t ce_bench_trials(const ce_bench* bench);
CE_API double ce_bench_mean_best(const ce_bench* bench);
CE_API double ce_bench_sdv_best(const ce_bench* bench);
CE_API double ce_bench_mean_time(const ce_bench* bench);
CE_API ce_status ce_bench_trial_best_tour(const ce_bench* bench, size_t index, ce_tour** out);

/* Writes the per-trial rows of all `count` benchmarks, in order, as CSV. */
CE_API ce_status ce_results_write_csv(const ce_bench* const* benches, size_t count, const char* path);
CE_API ce_status ce_trial_write_csv(const ce_trial* trial, const char* path);

/*
 * Comparison table for two benchmarks on the same instance, budget and
 * metric. Writes a NUL-terminated string into `buffer`; `*required` receives
 * the size needed including the terminator. A NULL buffer only queries the
 * size.
 */
CE_API ce_status ce_compare_format(const ce_bench* a, const ce_bench* b, char* buffer, size_t capacity,
                                   size_t* required);
CE_API ce_status ce_compare_mean_difference(const ce_bench* a, const ce_bench* b, double* difference);

CE_API ce_status ce_render_svg(const ce_instance* instance, const ce_tour* tour, ce_metric metric,
                               const char* path);

#ifdef __cplusplus
}
#endif

#endif /* CHASE_ESCAPE_H */
