/*
 * swarmnet C API
 *
 * Trains single-hidden-layer feed-forward (MLP) and cascade (CMLP) networks
 * for binary classification with derivative-free swarm optimizers (GWO,
 * modified GWO, FDO), and evaluates them with confusion-matrix metrics.
 *
 * Conventions:
 *   - Every fallible call returns swn_status. On failure a one-line message
 *     is available from swn_last_error() on the calling thread until the
 *     next failing call on that thread.
 *   - Objects are opaque handles created by the create, load, train,
 *     evaluate and bench calls and released with the matching destroy call.
 *     Passing NULL to a destroy call is a no-op.
 *   - Strings returned by the library are owned by the library and remain
 *     valid for the lifetime of the handle they came from.
 */
#ifndef SWARMNET_H
#define SWARMNET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SWN_BUILDING_LIBRARY)
#    define SWN_API __declspec(dllexport)
#  else
#    define SWN_API __declspec(dllimport)
#  endif
#else
#  define SWN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swn_status {
  SWN_OK = 0,
  SWN_ERROR_INVALID_ARGUMENT = 1,
  SWN_ERROR_CONFIG = 2,
  SWN_ERROR_IO = 3,
  SWN_ERROR_SCHEMA = 4,
  SWN_ERROR_NUMERIC = 5,
  SWN_ERROR_SCHEMA_DRIFT = 6,
  SWN_ERROR_INTERNAL = 7
} swn_status;

typedef enum swn_network_kind {
  SWN_NETWORK_MLP = 0,
  SWN_NETWORK_CMLP = 1
} swn_network_kind;

SWN_API const char* swn_version(void);
SWN_API const char* swn_status_name(swn_status status);
SWN_API const char* swn_last_error(void);

/* ---- topology and split helpers ---------------------------------------- */

/* 2 * inputs + 1; 0 when inputs is 0. */
SWN_API size_t swn_hidden_count(size_t inputs);

/* Length of the flat weight vector for a single-output network. */
SWN_API swn_status swn_parameter_count(swn_network_kind kind, size_t inputs, size_t hidden, size_t* out_count);

/* 80:20 partition sizes, train = ceil(0.8 * n). */
SWN_API swn_status swn_split_sizes(size_t n, size_t* out_train, size_t* out_test);

/* ---- metrics ----------------------------------------------------------- */

typedef struct swn_metrics {
  double sensitivity;
  double specificity;
  double ppv;
  double npv;
  double accuracy;
  double correct_rate_percent;
  unsigned degenerate_flags; /* bit 0 sensitivity, 1 specificity, 2 ppv, 3 npv: zero denominator, reported as 1 */
} swn_metrics;

SWN_API swn_status swn_metrics_from_counts(uint64_t tp, uint64_t fn, uint64_t tn, uint64_t fp, swn_metrics* out);

/* ---- datasets ---------------------------------------------------------- */

typedef struct swn_dataset swn_dataset;

typedef struct swn_load_stats {
  size_t rows_read;
  size_t dropped_missing;
  size_t dropped_invalid;
  size_t dropped_duplicate;
} swn_load_stats;

SWN_API swn_status swn_dataset_load(const char* csv_path, const char* schema_path, swn_dataset** out);
SWN_API void swn_dataset_destroy(swn_dataset* dataset);
SWN_API size_t swn_dataset_rows(const swn_dataset* dataset);
SWN_API size_t swn_dataset_features(const swn_dataset* dataset);
SWN_API swn_status swn_dataset_stats(const swn_dataset* dataset, swn_load_stats* out);
/* Row-major copy of the encoded features; buffer holds rows * features values. */
SWN_API swn_status swn_dataset_copy_features(const swn_dataset* dataset, double* buffer, size_t buffer_len);
SWN_API swn_status swn_dataset_copy_targets(const swn_dataset* dataset, double* buffer, size_t buffer_len);
SWN_API const char* swn_dataset_schema_fingerprint(const swn_dataset* dataset);
SWN_API swn_status swn_dataset_export_encoded(const swn_dataset* dataset, const char* path);

/* ---- models ------------------------------------------------------------ */

typedef struct swn_model swn_model;

SWN_API swn_status swn_model_load(const char* path, swn_model** out);
SWN_API void swn_model_destroy(swn_model* model);
SWN_API size_t swn_model_inputs(const swn_model* model);
SWN_API size_t swn_model_parameter_count(const swn_model* model);
SWN_API const char* swn_model_name(const swn_model* model);
/* Raw outputs for `rows` feature rows (row-major, rows * inputs values). */
SWN_API swn_status swn_model_predict(const swn_model* model, const double* features, size_t rows, double* outputs);
/* Encoded class for a raw output: 1 (positive) or 2 (negative). */
SWN_API int swn_classify(double output);

/* ---- train ------------------------------------------------------------- */

typedef struct swn_train_options {
  const char* dataset_path;
  const char* schema_path;
  const char* model;            /* GWO_MLP, GWO_CMLP, MGWO_MLP, FDO_MLP, FDO_CMLP */
  size_t agents;                /* default 10 */
  size_t iterations;            /* default 50 */
  double weight_factor;         /* default 0 */
  uint64_t seed;                /* default 1 */
  uint64_t split_seed;          /* default 1 */
  const char* output_directory; /* NULL: $SWARMNET_OUTPUT_DIR, else "swarmnet-out" */
  unsigned threads;             /* default 1 */
  int export_encoded;           /* nonzero: also write encoded.csv */
} swn_train_options;

typedef struct swn_training swn_training;

SWN_API void swn_train_options_init(swn_train_options* options);
SWN_API swn_status swn_train(const swn_train_options* options, swn_training** out);
SWN_API void swn_training_destroy(swn_training* training);
SWN_API const char* swn_training_output_directory(const swn_training* training);
SWN_API size_t swn_training_dimension(const swn_training* training);
SWN_API double swn_training_best_fitness(const swn_training* training);
SWN_API double swn_training_elapsed_seconds(const swn_training* training);
SWN_API double swn_training_train_rate(const swn_training* training);
SWN_API double swn_training_test_rate(const swn_training* training);
SWN_API size_t swn_training_artifact_count(const swn_training* training);
SWN_API const char* swn_training_artifact(const swn_training* training, size_t index);

/* ---- evaluate ---------------------------------------------------------- */

typedef struct swn_evaluate_options {
  const char* model_path;
  const char* dataset_path;
  const char* schema_path;
  int has_split_seed;           /* zero: use the split seed recorded in the model */
  uint64_t split_seed;
  const char* output_directory; /* NULL: report only, no files */
} swn_evaluate_options;

typedef struct swn_evaluation swn_evaluation;

SWN_API void swn_evaluate_options_init(swn_evaluate_options* options);
SWN_API swn_status swn_evaluate(const swn_evaluate_options* options, swn_evaluation** out);
SWN_API void swn_evaluation_destroy(swn_evaluation* evaluation);
SWN_API const char* swn_evaluation_report(const swn_evaluation* evaluation);
SWN_API const char* swn_evaluation_experiment_id(const swn_evaluation* evaluation);
SWN_API int swn_evaluation_same_split(const swn_evaluation* evaluation);
SWN_API swn_status swn_evaluation_metrics(const swn_evaluation* evaluation, swn_metrics* out);

/* ---- bench ------------------------------------------------------------- */

typedef struct swn_bench_options {
  const char* optimizer; /* gwo, mgwo, fdo */
  const char* function;  /* sphere, rastrigin */
  size_t dimension;      /* default 10 */
  size_t agents;         /* default 10 */
  size_t iterations;     /* default 50 */
  uint64_t seed;         /* default 1 */
  double weight_factor;  /* default 0, FDO only */
} swn_bench_options;

typedef struct swn_run swn_run;

SWN_API void swn_bench_options_init(swn_bench_options* options);
SWN_API swn_status swn_bench(const swn_bench_options* options, swn_run** out);
SWN_API void swn_run_destroy(swn_run* run);
SWN_API double swn_run_best_fitness(const swn_run* run);
SWN_API size_t swn_run_trace_length(const swn_run* run);
SWN_API const double* swn_run_trace(const swn_run* run);
/* Writes `iteration,best_fitness` CSV; path "-" or NULL writes to stdout. */
SWN_API swn_status swn_run_write_trace_csv(const swn_run* run, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* SWARMNET_H */
