/* C interface to the mohboa optimization library.
 *
 * All objects are opaque handles created by *_create functions and released
 * by the matching *_destroy. Functions returning mohboa_status store a
 * message retrievable with mohboa_last_error() on failure; the message is
 * per thread and valid until the next failing call on that thread.
 * Strings returned by accessors are owned by the handle they came from.
 */
#ifndef MOHBOA_H
#define MOHBOA_H

#include <stddef.h>
#include <stdint.h>

#if defined(MOHBOA_BUILDING_LIBRARY)
#define MOHBOA_API __attribute__((visibility("default")))
#else
#define MOHBOA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mohboa_status {
  MOHBOA_OK = 0,
  MOHBOA_INVALID_ARGUMENT = 1,
  MOHBOA_INVALID_STATE = 2,
  MOHBOA_IO_ERROR = 3,
  MOHBOA_INTERNAL_ERROR = 4
} mohboa_status;

typedef struct mohboa_config mohboa_config;
typedef struct mohboa_run mohboa_run;
typedef struct mohboa_run_result mohboa_run_result;
typedef struct mohboa_bisection mohboa_bisection;
typedef struct mohboa_sweep mohboa_sweep;
typedef struct mohboa_front mohboa_front;

MOHBOA_API const char* mohboa_last_error(void);
MOHBOA_API const char* mohboa_status_name(mohboa_status status);

/* ---- configuration ------------------------------------------------------
 * Keys (values are strings):
 *   problem         onemax-zeromax | trap5-invtrap5      (onemax-zeromax)
 *   size            problem size in bits                 (10)
 *   algo            umda | ga | hboa                     (hboa)
 *   clustering      auto | off | K                       (auto)
 *   replacement     elitist | rtr | rtr-objective        (rtr)
 *   pop             population size                      (100)
 *   max-gens-mult   generation cap as multiple of n      (5, or 10 for ga)
 *   max-gens        absolute generation cap
 *   pc              crossover probability                (0.6)
 *   pm              per-bit mutation probability | auto  (auto = 1/n)
 *   partition       contiguous | shuffled                (contiguous)
 *   partition-seed  seed for the shuffled partition      (0)
 *   rtr-window      RTR window | auto                    (auto)
 *   crowding        raw | normalized                     (raw)
 *   kmeans-restarts k-means attempts                     (3)
 *   kmeans-iters    k-means iteration cap                (100)
 */
MOHBOA_API mohboa_status mohboa_config_create(mohboa_config** out);
MOHBOA_API mohboa_status mohboa_config_clone(const mohboa_config* cfg, mohboa_config** out);
MOHBOA_API void mohboa_config_destroy(mohboa_config* cfg);
MOHBOA_API mohboa_status mohboa_config_set(mohboa_config* cfg, const char* key, const char* value);
/* Checks the whole configuration; fails with MOHBOA_INVALID_ARGUMENT. */
MOHBOA_API mohboa_status mohboa_config_validate(const mohboa_config* cfg);

/* ---- single runs -------------------------------------------------------- */
MOHBOA_API mohboa_status mohboa_run_config(const mohboa_config* cfg, uint64_t seed,
                                           mohboa_run_result** out);

MOHBOA_API mohboa_status mohboa_run_create(const mohboa_config* cfg, uint64_t seed, mohboa_run** out);
MOHBOA_API void mohboa_run_destroy(mohboa_run* run);
/* One generation. MOHBOA_INVALID_STATE once the run has terminated. */
MOHBOA_API mohboa_status mohboa_run_step(mohboa_run* run);
MOHBOA_API int mohboa_run_terminated(const mohboa_run* run);
MOHBOA_API uint64_t mohboa_run_evaluations(const mohboa_run* run);
MOHBOA_API mohboa_status mohboa_run_result_get(const mohboa_run* run, mohboa_run_result** out);

MOHBOA_API void mohboa_result_destroy(mohboa_run_result* result);
MOHBOA_API int mohboa_result_success(const mohboa_run_result* result);
MOHBOA_API uint64_t mohboa_result_generations(const mohboa_run_result* result);
MOHBOA_API uint64_t mohboa_result_evaluations(const mohboa_run_result* result);
MOHBOA_API uint64_t mohboa_result_coverage(const mohboa_run_result* result);
MOHBOA_API uint64_t mohboa_result_front_size(const mohboa_run_result* result);
MOHBOA_API size_t mohboa_result_trajectory_length(const mohboa_run_result* result);
MOHBOA_API uint64_t mohboa_result_trajectory_at(const mohboa_run_result* result, size_t generation);
MOHBOA_API const char* mohboa_result_csv_row(const mohboa_run_result* result);
MOHBOA_API const char* mohboa_run_csv_header(void);

/* ---- bisection and sweeps ----------------------------------------------- */
typedef struct mohboa_bisect_options {
  size_t initial_population; /* 16 */
  size_t max_population;     /* 2^20 */
  double width;              /* 1.1 */
  size_t reps;               /* 10 */
  size_t runs;               /* 10 */
  uint64_t budget;           /* UINT64_MAX */
} mohboa_bisect_options;

MOHBOA_API void mohboa_bisect_options_init(mohboa_bisect_options* opts);

MOHBOA_API mohboa_status mohboa_bisect(const mohboa_config* cfg, const mohboa_bisect_options* opts,
                                       uint64_t base_seed, mohboa_bisection** out);
MOHBOA_API void mohboa_bisection_destroy(mohboa_bisection* b);
MOHBOA_API int mohboa_bisection_success(const mohboa_bisection* b);
MOHBOA_API double mohboa_bisection_min_pop(const mohboa_bisection* b);
MOHBOA_API size_t mohboa_bisection_last_failing(const mohboa_bisection* b);
MOHBOA_API double mohboa_bisection_mean_evals(const mohboa_bisection* b);
MOHBOA_API double mohboa_bisection_std_evals(const mohboa_bisection* b);
MOHBOA_API size_t mohboa_bisection_runs(const mohboa_bisection* b);
MOHBOA_API uint64_t mohboa_bisection_evaluations_spent(const mohboa_bisection* b);
MOHBOA_API const char* mohboa_bisection_csv_row(const mohboa_bisection* b);
MOHBOA_API const char* mohboa_sweep_csv_header(void);

MOHBOA_API mohboa_status mohboa_sweep_create(mohboa_sweep** out);
MOHBOA_API void mohboa_sweep_destroy(mohboa_sweep* s);
MOHBOA_API mohboa_status mohboa_sweep_add_size(mohboa_sweep* s, size_t n);
/* The variant's problem kind and settings are copied; its size is replaced
 * by each sweep size. */
MOHBOA_API mohboa_status mohboa_sweep_add_variant(mohboa_sweep* s, const mohboa_config* cfg);
MOHBOA_API mohboa_status mohboa_sweep_execute(mohboa_sweep* s, const mohboa_bisect_options* opts,
                                              uint64_t base_seed);
MOHBOA_API size_t mohboa_sweep_row_count(const mohboa_sweep* s);
MOHBOA_API int mohboa_sweep_row_success(const mohboa_sweep* s, size_t row);
MOHBOA_API const char* mohboa_sweep_row_csv(const mohboa_sweep* s, size_t row);
MOHBOA_API mohboa_status mohboa_sweep_write_csv(const mohboa_sweep* s, const char* path);

/* ---- reference fronts --------------------------------------------------- */
MOHBOA_API mohboa_status mohboa_front_create(const mohboa_config* cfg, mohboa_front** out);
MOHBOA_API void mohboa_front_destroy(mohboa_front* f);
MOHBOA_API size_t mohboa_front_size(const mohboa_front* f);
MOHBOA_API mohboa_status mohboa_front_point(const mohboa_front* f, size_t index, double* first,
                                            double* second);

#ifdef __cplusplus
}
#endif

#endif /* MOHBOA_H */
