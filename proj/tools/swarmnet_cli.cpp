// swarmnet command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "swarmnet/swarmnet.h"

namespace {

int report_failure(swn_status status) {
  std::fprintf(stderr, "swarmnet: %s: %s\n", swn_status_name(status), swn_last_error());
  return static_cast<int>(status);
}

struct TrainArgs {
  std::string model = "GWO_MLP";
  std::string dataset;
  std::string schema;
  std::size_t agents = 10;
  std::size_t iterations = 50;
  double weight_factor = 0.0;
  std::uint64_t seed = 1;
  std::uint64_t split_seed = 1;
  std::string output;
  unsigned threads = 1;
  bool export_encoded = false;
};

struct EvaluateArgs {
  std::string model;
  std::string dataset;
  std::string schema;
  std::uint64_t split_seed = 0;
  std::string output;
};

struct BenchArgs {
  std::string optimizer;
  std::string function;
  std::size_t dim = 10;
  std::size_t agents = 10;
  std::size_t iterations = 50;
  std::uint64_t seed = 1;
  double weight_factor = 0.0;
  std::string out = "-";
};

int do_train(const TrainArgs& a) {
  swn_train_options opts;
  swn_train_options_init(&opts);
  opts.dataset_path = a.dataset.c_str();
  opts.schema_path = a.schema.c_str();
  opts.model = a.model.c_str();
  opts.agents = a.agents;
  opts.iterations = a.iterations;
  opts.weight_factor = a.weight_factor;
  opts.seed = a.seed;
  opts.split_seed = a.split_seed;
  opts.output_directory = a.output.empty() ? nullptr : a.output.c_str();
  opts.threads = a.threads;
  opts.export_encoded = a.export_encoded ? 1 : 0;

  swn_training* training = nullptr;
  if (swn_status st = swn_train(&opts, &training); st != SWN_OK) return report_failure(st);
  std::printf("%s: dimension %zu, best MSE %.7g, training %.4f%%, testing %.4f%%, %.3fs\n", a.model.c_str(),
              swn_training_dimension(training), swn_training_best_fitness(training), swn_training_train_rate(training),
              swn_training_test_rate(training), swn_training_elapsed_seconds(training));
  std::printf("wrote");
  for (std::size_t i = 0; i < swn_training_artifact_count(training); ++i) {
    std::printf(" %s", swn_training_artifact(training, i));
  }
  std::printf(" to %s\n", swn_training_output_directory(training));
  swn_training_destroy(training);
  return 0;
}

int do_evaluate(const EvaluateArgs& a, bool has_split_seed) {
  swn_evaluate_options opts;
  swn_evaluate_options_init(&opts);
  opts.model_path = a.model.c_str();
  opts.dataset_path = a.dataset.c_str();
  opts.schema_path = a.schema.c_str();
  opts.has_split_seed = has_split_seed ? 1 : 0;
  opts.split_seed = a.split_seed;
  opts.output_directory = a.output.empty() ? nullptr : a.output.c_str();

  swn_evaluation* evaluation = nullptr;
  if (swn_status st = swn_evaluate(&opts, &evaluation); st != SWN_OK) return report_failure(st);
  std::fputs(swn_evaluation_report(evaluation), stdout);
  std::printf("\nexperiment: %s%s\n", swn_evaluation_experiment_id(evaluation),
              swn_evaluation_same_split(evaluation) ? "" : " (split differs from training)");
  swn_evaluation_destroy(evaluation);
  return 0;
}

int do_bench(const BenchArgs& a) {
  swn_bench_options opts;
  swn_bench_options_init(&opts);
  opts.optimizer = a.optimizer.c_str();
  opts.function = a.function.c_str();
  opts.dimension = a.dim;
  opts.agents = a.agents;
  opts.iterations = a.iterations;
  opts.seed = a.seed;
  opts.weight_factor = a.weight_factor;

  swn_run* run = nullptr;
  if (swn_status st = swn_bench(&opts, &run); st != SWN_OK) return report_failure(st);
  const swn_status st = swn_run_write_trace_csv(run, a.out.c_str());
  swn_run_destroy(run);
  return st == SWN_OK ? 0 : report_failure(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Train and evaluate swarm-optimized neural network classifiers"};
  app.set_version_flag("--version", std::string("swarmnet ") + swn_version());
  app.require_subcommand(1);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Load, split 80:20, train, and write model, trace, reports and manifest");
  train_cmd->add_option("--model", train.model, "GWO_MLP, GWO_CMLP, MGWO_MLP, FDO_MLP or FDO_CMLP")
      ->capture_default_str();
  train_cmd->add_option("--dataset", train.dataset, "CSV dataset")->required();
  train_cmd->add_option("--schema", train.schema, "Schema file")->required();
  train_cmd->add_option("--agents", train.agents, "Search agents")->capture_default_str();
  train_cmd->add_option("--iterations", train.iterations, "Optimizer iterations")->capture_default_str();
  train_cmd->add_option("--weight-factor", train.weight_factor, "FDO weight factor (0 or 1)")->capture_default_str();
  train_cmd->add_option("--seed", train.seed, "Optimizer seed")->capture_default_str();
  train_cmd->add_option("--split-seed", train.split_seed, "Train/test split seed")->capture_default_str();
  train_cmd->add_option("--output", train.output, "Output directory (default $SWARMNET_OUTPUT_DIR or swarmnet-out)");
  train_cmd->add_option("--threads", train.threads, "Fitness evaluation threads")->capture_default_str();
  train_cmd->add_flag("--export-encoded", train.export_encoded, "Also write the encoded dataset as encoded.csv");

  EvaluateArgs evaluate;
  auto* eval_cmd = app.add_subcommand("evaluate", "Evaluate a trained model on the test partition");
  eval_cmd->add_option("--model", evaluate.model, "Model file written by train")->required();
  eval_cmd->add_option("--dataset", evaluate.dataset, "CSV dataset")->required();
  eval_cmd->add_option("--schema", evaluate.schema, "Schema file")->required();
  auto* split_opt = eval_cmd->add_option("--split-seed", evaluate.split_seed, "Split seed (default: the model's)");
  eval_cmd->add_option("--output", evaluate.output, "Also write evaluation files into this directory");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run an optimizer on a benchmark function and print its fitness trace");
  bench_cmd->add_option("optimizer", bench.optimizer, "gwo, mgwo or fdo")->required();
  bench_cmd->add_option("function", bench.function, "sphere or rastrigin")->required();
  bench_cmd->add_option("--dim", bench.dim, "Dimension")->capture_default_str();
  bench_cmd->add_option("--agents", bench.agents, "Search agents")->capture_default_str();
  bench_cmd->add_option("--iterations", bench.iterations, "Iterations")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Seed")->capture_default_str();
  bench_cmd->add_option("--weight-factor", bench.weight_factor, "FDO weight factor (0 or 1)")->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "Trace CSV path, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : SWN_ERROR_CONFIG;
  }

  if (train_cmd->parsed()) return do_train(train);
  if (eval_cmd->parsed()) return do_evaluate(evaluate, split_opt->count() > 0);
  return do_bench(bench);
}
