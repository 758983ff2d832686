#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swarmnet/evaluation.hpp"
#include "swarmnet/optimizer.hpp"
#include "swarmnet/training.hpp"

namespace swarmnet {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kOutputDirEnv = "SWARMNET_OUTPUT_DIR";

// Explicit value, else $SWARMNET_OUTPUT_DIR, else "swarmnet-out".
std::string resolve_output_directory(const std::string& explicit_dir);

struct ExperimentConfig {
  std::string dataset_path;
  std::string schema_path;
  ModelKind model = ModelKind::gwo_mlp;
  std::size_t agents = 10;
  std::size_t iterations = 50;
  double weight_factor = 0.0;
  std::uint64_t seed = 1;
  std::uint64_t split_seed = 1;
  std::string output_directory;
  unsigned threads = 1;
  bool export_encoded = false;
};

struct TrainSummary {
  std::string output_directory;
  std::vector<std::string> artifacts;  // file names inside output_directory
  ModelReport report;
  TrainResult result;
  LoadStats load_stats;
};

// Load, clean, split, train, then write model.txt, trace.csv, report.txt,
// metrics.csv, roc.csv and manifest.txt (plus encoded.csv on request).
// Files are staged and renamed into place only once all of them have been
// written; on failure nothing is left behind.
TrainSummary run_train(const ExperimentConfig& config);

struct EvaluateConfig {
  std::string model_path;
  std::string dataset_path;
  std::string schema_path;
  std::optional<std::uint64_t> split_seed;  // defaults to the model's
  std::string output_directory;             // empty: no files written
};

struct EvaluateSummary {
  ModelReport report;
  std::string report_text;
  std::uint64_t split_seed = 0;
  bool same_split_as_training = true;
  std::string experiment_id;
  std::vector<std::string> artifacts;
};

// Re-derives the split and evaluates the model on the test partition.
// Throws SchemaDriftError when the schema fingerprint differs from the one
// recorded in the model.
EvaluateSummary run_evaluate(const EvaluateConfig& config);

struct BenchConfig {
  OptimizerKind optimizer = OptimizerKind::gwo;
  std::string function = "sphere";
  std::size_t dimension = 10;
  std::size_t agents = 10;
  std::size_t iterations = 50;
  std::uint64_t seed = 1;
  double weight_factor = 0.0;
};

// sphere: [-100, 100]^d, rastrigin: [-5.12, 5.12]^d.
SearchSpace bench_space(const std::string& function, std::size_t dimension);
Objective bench_objective(const std::string& function);

RunResult run_bench(const BenchConfig& config);

}  // namespace swarmnet
