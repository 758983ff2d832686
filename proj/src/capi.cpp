#include "swarmnet/swarmnet.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>

#include "swarmnet/dataset.hpp"
#include "swarmnet/error.hpp"
#include "swarmnet/evaluation.hpp"
#include "swarmnet/experiment.hpp"
#include "swarmnet/network.hpp"

struct swn_dataset {
  swarmnet::Dataset data;
  std::string fingerprint;
};

struct swn_model {
  swarmnet::ModelFile file;
};

struct swn_training {
  swarmnet::TrainSummary summary;
};

struct swn_evaluation {
  swarmnet::EvaluateSummary summary;
};

struct swn_run {
  swarmnet::RunResult result;
};

namespace {

thread_local std::string g_last_error;

swn_status to_status(swarmnet::ErrorKind kind) {
  using swarmnet::ErrorKind;
  switch (kind) {
    case ErrorKind::invalid_argument: return SWN_ERROR_INVALID_ARGUMENT;
    case ErrorKind::config: return SWN_ERROR_CONFIG;
    case ErrorKind::io: return SWN_ERROR_IO;
    case ErrorKind::schema: return SWN_ERROR_SCHEMA;
    case ErrorKind::numeric: return SWN_ERROR_NUMERIC;
    case ErrorKind::schema_drift: return SWN_ERROR_SCHEMA_DRIFT;
  }
  return SWN_ERROR_INTERNAL;
}

swn_status fail(swn_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
swn_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return SWN_OK;
  } catch (const swarmnet::Error& e) {
    return fail(to_status(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SWN_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SWN_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(SWN_ERROR_INTERNAL, "unknown error");
  }
}

std::string str_or_empty(const char* s) {
  return s ? std::string(s) : std::string();
}

swn_metrics to_c(const swarmnet::MetricSet& m) {
  return swn_metrics{m.sensitivity, m.specificity, m.ppv, m.npv, m.accuracy, m.correct_rate_percent, m.degenerate};
}

}  // namespace

extern "C" {

SWN_API const char* swn_version(void) {
  return swarmnet::kVersion;
}

SWN_API const char* swn_status_name(swn_status status) {
  switch (status) {
    case SWN_OK: return "ok";
    case SWN_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case SWN_ERROR_CONFIG: return "config error";
    case SWN_ERROR_IO: return "I/O error";
    case SWN_ERROR_SCHEMA: return "schema error";
    case SWN_ERROR_NUMERIC: return "numeric error";
    case SWN_ERROR_SCHEMA_DRIFT: return "schema drift";
    case SWN_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

SWN_API const char* swn_last_error(void) {
  return g_last_error.c_str();
}

SWN_API size_t swn_hidden_count(size_t inputs) {
  return inputs == 0 ? 0 : swarmnet::hidden_count(inputs);
}

SWN_API swn_status swn_parameter_count(swn_network_kind kind, size_t inputs, size_t hidden, size_t* out_count) {
  if (!out_count) return fail(SWN_ERROR_INVALID_ARGUMENT, "out_count is NULL");
  if (kind != SWN_NETWORK_MLP && kind != SWN_NETWORK_CMLP) return fail(SWN_ERROR_INVALID_ARGUMENT, "bad network kind");
  return guarded([&] {
    const swarmnet::NetworkTopology t{kind == SWN_NETWORK_MLP ? swarmnet::NetworkKind::mlp : swarmnet::NetworkKind::cmlp,
                                      inputs, hidden, 1};
    t.validate();
    *out_count = t.parameter_count();
  });
}

SWN_API swn_status swn_split_sizes(size_t n, size_t* out_train, size_t* out_test) {
  if (!out_train || !out_test) return fail(SWN_ERROR_INVALID_ARGUMENT, "output pointer is NULL");
  if (n < 5) return fail(SWN_ERROR_CONFIG, "an 80:20 split needs at least 5 samples");
  *out_train = swarmnet::train_size(n);
  *out_test = n - *out_train;
  return SWN_OK;
}

SWN_API swn_status swn_metrics_from_counts(uint64_t tp, uint64_t fn, uint64_t tn, uint64_t fp, swn_metrics* out) {
  if (!out) return fail(SWN_ERROR_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] { *out = to_c(swarmnet::metrics(swarmnet::ConfusionMatrix{tp, fn, tn, fp})); });
}

SWN_API swn_status swn_dataset_load(const char* csv_path, const char* schema_path, swn_dataset** out) {
  if (!csv_path || !schema_path || !out) return fail(SWN_ERROR_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    const auto schema = swarmnet::DatasetSchema::load(schema_path);
    auto handle = std::make_unique<swn_dataset>();
    handle->data = swarmnet::load_csv(csv_path, schema);
    handle->fingerprint = schema.fingerprint();
    *out = handle.release();
  });
}

SWN_API void swn_dataset_destroy(swn_dataset* dataset) {
  delete dataset;
}

SWN_API size_t swn_dataset_rows(const swn_dataset* dataset) {
  return dataset ? dataset->data.size() : 0;
}

SWN_API size_t swn_dataset_features(const swn_dataset* dataset) {
  return dataset ? dataset->data.features.cols : 0;
}

SWN_API swn_status swn_dataset_stats(const swn_dataset* dataset, swn_load_stats* out) {
  if (!dataset || !out) return fail(SWN_ERROR_INVALID_ARGUMENT, "NULL argument");
  const auto& s = dataset->data.stats;
  *out = swn_load_stats{s.rows_read, s.dropped_missing, s.dropped_invalid, s.dropped_duplicate};
  return SWN_OK;
}

SWN_API swn_status swn_dataset_copy_features(const swn_dataset* dataset, double* buffer, size_t buffer_len) {
  if (!dataset || !buffer) return fail(SWN_ERROR_INVALID_ARGUMENT, "NULL argument");
  const auto& values = dataset->data.features.data;
  if (buffer_len < values.size()) return fail(SWN_ERROR_INVALID_ARGUMENT, "feature buffer too small");
  std::copy(values.begin(), values.end(), buffer);
  return SWN_OK;
}

SWN_API swn_status swn_dataset_copy_targets(const swn_dataset* dataset, double* buffer, size_t buffer_len) {
  if (!dataset || !buffer) return fail(SWN_ERROR_INVALID_ARGUMENT, "NULL argument");
  const auto& values = dataset->data.targets;
  if (buffer_len < values.size()) return fail(SWN_ERROR_INVALID_ARGUMENT, "target buffer too small");
  std::copy(values.begin(), values.end(), buffer);
  return SWN_OK;
}

SWN_API const char* swn_dataset_schema_fingerprint(const swn_dataset* dataset) {
  return dataset ? dataset->fingerprint.c_str() : "";
}

SWN_API swn_status swn_dataset_export_encoded(const swn_dataset* dataset, const char* path) {
  if (!dataset || !path) return fail(SWN_ERROR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw swarmnet::IoError(std::string("cannot open '") + path + "' for writing");
    swarmnet::write_encoded_csv(out, dataset->data);
    out.flush();
    if (!out) throw swarmnet::IoError(std::string("cannot write '") + path + "'");
  });
}

SWN_API swn_status swn_model_load(const char* path, swn_model** out) {
  if (!path || !out) return fail(SWN_ERROR_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<swn_model>();
    handle->file = swarmnet::load_model(path);
    *out = handle.release();
  });
}

SWN_API void swn_model_destroy(swn_model* model) {
  delete model;
}

SWN_API size_t swn_model_inputs(const swn_model* model) {
  return model ? model->file.topology.inputs : 0;
}

SWN_API size_t swn_model_parameter_count(const swn_model* model) {
  return model ? model->file.params.size() : 0;
}

SWN_API const char* swn_model_name(const swn_model* model) {
  return model ? model->file.meta.model.c_str() : "";
}

SWN_API swn_status swn_model_predict(const swn_model* model, const double* features, size_t rows, double* outputs) {
  if (!model || (rows > 0 && (!features || !outputs))) return fail(SWN_ERROR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    const auto& t = model->file.topology;
    for (size_t r = 0; r < rows; ++r) {
      outputs[r] = swarmnet::forward(t, model->file.params, std::span<const double>(features + r * t.inputs, t.inputs));
    }
  });
}

SWN_API int swn_classify(double output) {
  return swarmnet::classify(output);
}

SWN_API void swn_train_options_init(swn_train_options* options) {
  if (!options) return;
  *options = swn_train_options{nullptr, nullptr, "GWO_MLP", 10, 50, 0.0, 1, 1, nullptr, 1, 0};
}

SWN_API swn_status swn_train(const swn_train_options* options, swn_training** out) {
  if (!options || !out) return fail(SWN_ERROR_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  if (!options->dataset_path || !options->schema_path) {
    return fail(SWN_ERROR_CONFIG, "dataset and schema paths are required");
  }
  return guarded([&] {
    swarmnet::ExperimentConfig config;
    config.dataset_path = options->dataset_path;
    config.schema_path = options->schema_path;
    config.model = swarmnet::parse_model_kind(options->model ? options->model : "");
    config.agents = options->agents;
    config.iterations = options->iterations;
    config.weight_factor = options->weight_factor;
    config.seed = options->seed;
    config.split_seed = options->split_seed;
    config.output_directory = str_or_empty(options->output_directory);
    config.threads = options->threads;
    config.export_encoded = options->export_encoded != 0;
    auto handle = std::make_unique<swn_training>();
    handle->summary = swarmnet::run_train(config);
    *out = handle.release();
  });
}

SWN_API void swn_training_destroy(swn_training* training) {
  delete training;
}

SWN_API const char* swn_training_output_directory(const swn_training* training) {
  return training ? training->summary.output_directory.c_str() : "";
}

SWN_API size_t swn_training_dimension(const swn_training* training) {
  return training ? training->summary.report.dimension : 0;
}

SWN_API double swn_training_best_fitness(const swn_training* training) {
  return training ? training->summary.result.run.best_fitness : 0.0;
}

SWN_API double swn_training_elapsed_seconds(const swn_training* training) {
  return training ? training->summary.result.run.elapsed_seconds : 0.0;
}

SWN_API double swn_training_train_rate(const swn_training* training) {
  return training ? training->summary.report.partitions.at(0).metrics.correct_rate_percent : 0.0;
}

SWN_API double swn_training_test_rate(const swn_training* training) {
  return training ? training->summary.report.partitions.at(1).metrics.correct_rate_percent : 0.0;
}

SWN_API size_t swn_training_artifact_count(const swn_training* training) {
  return training ? training->summary.artifacts.size() : 0;
}

SWN_API const char* swn_training_artifact(const swn_training* training, size_t index) {
  if (!training || index >= training->summary.artifacts.size()) return nullptr;
  return training->summary.artifacts[index].c_str();
}

SWN_API void swn_evaluate_options_init(swn_evaluate_options* options) {
  if (!options) return;
  *options = swn_evaluate_options{nullptr, nullptr, nullptr, 0, 0, nullptr};
}

SWN_API swn_status swn_evaluate(const swn_evaluate_options* options, swn_evaluation** out) {
  if (!options || !out) return fail(SWN_ERROR_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  if (!options->model_path || !options->dataset_path || !options->schema_path) {
    return fail(SWN_ERROR_CONFIG, "model, dataset and schema paths are required");
  }
  return guarded([&] {
    swarmnet::EvaluateConfig config;
    config.model_path = options->model_path;
    config.dataset_path = options->dataset_path;
    config.schema_path = options->schema_path;
    if (options->has_split_seed) config.split_seed = options->split_seed;
    config.output_directory = str_or_empty(options->output_directory);
    auto handle = std::make_unique<swn_evaluation>();
    handle->summary = swarmnet::run_evaluate(config);
    *out = handle.release();
  });
}

SWN_API void swn_evaluation_destroy(swn_evaluation* evaluation) {
  delete evaluation;
}

SWN_API const char* swn_evaluation_report(const swn_evaluation* evaluation) {
  return evaluation ? evaluation->summary.report_text.c_str() : "";
}

SWN_API const char* swn_evaluation_experiment_id(const swn_evaluation* evaluation) {
  return evaluation ? evaluation->summary.experiment_id.c_str() : "";
}

SWN_API int swn_evaluation_same_split(const swn_evaluation* evaluation) {
  return evaluation && evaluation->summary.same_split_as_training ? 1 : 0;
}

SWN_API swn_status swn_evaluation_metrics(const swn_evaluation* evaluation, swn_metrics* out) {
  if (!evaluation || !out) return fail(SWN_ERROR_INVALID_ARGUMENT, "NULL argument");
  *out = to_c(evaluation->summary.report.partitions.at(0).metrics);
  return SWN_OK;
}

SWN_API void swn_bench_options_init(swn_bench_options* options) {
  if (!options) return;
  *options = swn_bench_options{"gwo", "sphere", 10, 10, 50, 1, 0.0};
}

SWN_API swn_status swn_bench(const swn_bench_options* options, swn_run** out) {
  if (!options || !out) return fail(SWN_ERROR_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    swarmnet::BenchConfig config;
    config.optimizer = swarmnet::parse_optimizer_kind(options->optimizer ? options->optimizer : "");
    config.function = str_or_empty(options->function);
    config.dimension = options->dimension;
    config.agents = options->agents;
    config.iterations = options->iterations;
    config.seed = options->seed;
    config.weight_factor = options->weight_factor;
    auto handle = std::make_unique<swn_run>();
    handle->result = swarmnet::run_bench(config);
    *out = handle.release();
  });
}

SWN_API void swn_run_destroy(swn_run* run) {
  delete run;
}

SWN_API double swn_run_best_fitness(const swn_run* run) {
  return run ? run->result.best_fitness : 0.0;
}

SWN_API size_t swn_run_trace_length(const swn_run* run) {
  return run ? run->result.fitness_trace.size() : 0;
}

SWN_API const double* swn_run_trace(const swn_run* run) {
  return run ? run->result.fitness_trace.data() : nullptr;
}

SWN_API swn_status swn_run_write_trace_csv(const swn_run* run, const char* path) {
  if (!run) return fail(SWN_ERROR_INVALID_ARGUMENT, "NULL argument");
  return guarded([&] {
    if (!path || std::string(path) == "-") {
      swarmnet::write_trace_csv(std::cout, run->result.fitness_trace);
      std::cout.flush();
      return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw swarmnet::IoError(std::string("cannot open '") + path + "' for writing");
    swarmnet::write_trace_csv(out, run->result.fitness_trace);
    out.close();
    if (!out) {
      std::remove(path);
      throw swarmnet::IoError(std::string("cannot write '") + path + "'");
    }
  });
}

}  // extern "C"
