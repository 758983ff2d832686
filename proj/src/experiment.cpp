#include "swarmnet/experiment.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "format.hpp"
#include "swarmnet/error.hpp"

namespace fs = std::filesystem;

namespace swarmnet {

std::string resolve_output_directory(const std::string& explicit_dir) {
  if (!explicit_dir.empty()) return explicit_dir;
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
  return "swarmnet-out";
}

namespace {

// Collects artifact contents in memory and publishes them together.
class StagedOutput {
 public:
  explicit StagedOutput(std::string dir) : dir_(std::move(dir)) {}

  void add(std::string name, std::string content) { files_.emplace_back(std::move(name), std::move(content)); }

  std::vector<std::string> commit() {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create output directory '" + dir_ + "': " + ec.message());

    std::vector<fs::path> staged;
    std::vector<fs::path> published;
    const auto cleanup = [&] {
      std::error_code ignored;
      for (const auto& p : staged) fs::remove(p, ignored);
      for (const auto& p : published) fs::remove(p, ignored);
    };

    try {
      for (const auto& [name, content] : files_) {
        const fs::path tmp = fs::path(dir_) / (name + ".partial");
        staged.push_back(tmp);
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        out.flush();
        if (!out) throw IoError("cannot write '" + tmp.string() + "'");
      }
      for (std::size_t i = 0; i < files_.size(); ++i) {
        const fs::path final_path = fs::path(dir_) / files_[i].first;
        fs::rename(staged[i], final_path, ec);
        if (ec) throw IoError("cannot move '" + staged[i].string() + "' into place: " + ec.message());
        published.push_back(final_path);
      }
    } catch (...) {
      cleanup();
      throw;
    }

    std::vector<std::string> names;
    for (const auto& f : files_) names.push_back(f.first);
    return names;
  }

 private:
  std::string dir_;
  std::vector<std::pair<std::string, std::string>> files_;
};

template <typename Fn>
std::string render(Fn&& fn) {
  std::ostringstream out;
  fn(out);
  return out.str();
}

void validate_run_settings(OptimizerKind optimizer, std::size_t agents, std::size_t iterations,
                           double weight_factor) {
  OptimizerConfig{agents, iterations, 0, 1}.validate();
  const FdoConfig fdo{weight_factor};
  fdo.validate();
  const auto strategy = make_strategy(optimizer, fdo);
  if (agents < strategy->min_agents()) {
    throw ConfigError(std::string(strategy->name()) + " requires at least " + std::to_string(strategy->min_agents()) +
                      " agents (got " + std::to_string(agents) + ")");
  }
}

struct Prepared {
  DatasetSchema schema;
  Dataset data;
  Split split;
  Dataset train;
  Dataset test;
};

Prepared prepare(const std::string& dataset_path, const std::string& schema_path, std::uint64_t split_seed) {
  Prepared p;
  p.schema = DatasetSchema::load(schema_path);
  p.data = load_csv(dataset_path, p.schema);
  p.split = split_80_20(p.data.size(), split_seed);
  p.train = p.data.subset(p.split.train);
  p.test = p.data.subset(p.split.test);
  return p;
}

std::string dataset_label(const DatasetSchema& schema, const std::string& dataset_path) {
  return schema.name.empty() ? fs::path(dataset_path).filename().string() : schema.name;
}

}  // namespace

TrainSummary run_train(const ExperimentConfig& config) {
  const OptimizerKind optimizer = optimizer_of(config.model);
  validate_run_settings(optimizer, config.agents, config.iterations, config.weight_factor);
  if (config.threads < 1) throw ConfigError("thread count must be at least 1");

  Prepared p = prepare(config.dataset_path, config.schema_path, config.split_seed);
  const auto topology = NetworkTopology::for_inputs(network_of(config.model), p.data.features.cols);
  const auto problem = TrainingProblem::make(topology, p.train.features, p.train.targets);

  const OptimizerConfig opt{config.agents, config.iterations, config.seed, config.threads};
  TrainSummary summary;
  summary.result = train(config.model, problem, opt, FdoConfig{config.weight_factor});
  summary.load_stats = p.data.stats;
  summary.output_directory = resolve_output_directory(config.output_directory);

  ModelFile model;
  model.topology = topology;
  model.meta = ModelMeta{std::string(to_string(config.model)), std::string(to_string(optimizer)), config.seed,
                         config.split_seed, config.agents, config.iterations, config.weight_factor,
                         p.schema.fingerprint()};
  model.params = summary.result.params;

  ModelReport& report = summary.report;
  report.model = model.meta.model;
  report.dataset = dataset_label(p.schema, config.dataset_path);
  report.schema_fingerprint = model.meta.schema_fingerprint;
  report.samples = p.data.size();
  report.dimension = topology.parameter_count();
  report.partitions.push_back(evaluate_partition("Training", topology, model.params, p.train));
  report.partitions.push_back(evaluate_partition("Testing", topology, model.params, p.test));
  const auto& testing = report.partitions.back();

  StagedOutput out(summary.output_directory);
  out.add("model.txt", render([&](std::ostream& o) { write_model(o, model); }));
  out.add("trace.csv", render([&](std::ostream& o) { write_trace_csv(o, summary.result.run.fitness_trace); }));
  out.add("report.txt", render([&](std::ostream& o) { write_report(o, report); }));
  out.add("metrics.csv", render([&](std::ostream& o) { write_metrics_csv(o, report); }));
  out.add("roc.csv", render([&](std::ostream& o) {
            if (testing.roc) write_roc_csv(o, *testing.roc);
            else o << "threshold,fpr,tpr\n";
          }));
  if (config.export_encoded) out.add("encoded.csv", render([&](std::ostream& o) { write_encoded_csv(o, p.data); }));

  std::vector<std::string> artifact_names{"model.txt", "trace.csv", "report.txt", "metrics.csv", "roc.csv"};
  if (config.export_encoded) artifact_names.push_back("encoded.csv");
  artifact_names.push_back("manifest.txt");

  const auto& stats = p.data.stats;
  const auto& run = summary.result.run;
  out.add("manifest.txt", render([&](std::ostream& o) {
            o << "tool = swarmnet " << kVersion << '\n';
            o << "command = train\n";
            o << "model = " << model.meta.model << '\n';
            o << "optimizer = " << model.meta.optimizer << '\n';
            o << "network = " << to_string(topology.kind) << '\n';
            o << "dataset_path = " << config.dataset_path << '\n';
            o << "schema_path = " << config.schema_path << '\n';
            o << "dataset_name = " << report.dataset << '\n';
            o << "schema_fingerprint = " << model.meta.schema_fingerprint << '\n';
            o << "inputs = " << topology.inputs << '\n';
            o << "hidden = " << topology.hidden << '\n';
            o << "dimension = " << topology.parameter_count() << '\n';
            o << "agents = " << config.agents << '\n';
            o << "iterations = " << config.iterations << '\n';
            o << "weight_factor = " << format_real(config.weight_factor) << '\n';
            o << "seed = " << config.seed << '\n';
            o << "split_seed = " << config.split_seed << '\n';
            o << "weight_bounds = " << format_real(-kWeightBound) << ',' << format_real(kWeightBound) << '\n';
            o << "rows_read = " << stats.rows_read << '\n';
            o << "dropped_missing = " << stats.dropped_missing << '\n';
            o << "dropped_invalid = " << stats.dropped_invalid << '\n';
            o << "dropped_duplicate = " << stats.dropped_duplicate << '\n';
            o << "samples = " << p.data.size() << '\n';
            o << "train_samples = " << p.train.size() << '\n';
            o << "test_samples = " << p.test.size() << '\n';
            o << "best_fitness = " << format_real(run.best_fitness) << '\n';
            o << "train_rate_percent = " << format_real(report.partitions[0].metrics.correct_rate_percent) << '\n';
            o << "test_rate_percent = " << format_real(testing.metrics.correct_rate_percent) << '\n';
            o << "artifacts = ";
            for (std::size_t i = 0; i < artifact_names.size(); ++i) o << (i ? "," : "") << artifact_names[i];
            o << '\n';
            o << "elapsed_seconds = " << format_fixed(run.elapsed_seconds, 3) << '\n';
          }));

  summary.artifacts = out.commit();
  return summary;
}

EvaluateSummary run_evaluate(const EvaluateConfig& config) {
  const ModelFile model = load_model(config.model_path);
  const DatasetSchema schema = DatasetSchema::load(config.schema_path);
  const std::string fingerprint = schema.fingerprint();
  if (fingerprint != model.meta.schema_fingerprint) {
    throw SchemaDriftError("schema fingerprint " + fingerprint + " does not match the model's " +
                           model.meta.schema_fingerprint + " (the schema changed since training)");
  }

  EvaluateSummary summary;
  summary.split_seed = config.split_seed.value_or(model.meta.split_seed);
  summary.same_split_as_training = summary.split_seed == model.meta.split_seed;
  summary.experiment_id = fingerprint + "-" + model.meta.model + "-seed" + std::to_string(model.meta.seed) + "-split" +
                          std::to_string(summary.split_seed);

  Prepared p = prepare(config.dataset_path, config.schema_path, summary.split_seed);
  if (p.data.features.cols != model.topology.inputs) {
    throw SchemaDriftError("dataset has " + std::to_string(p.data.features.cols) + " features, model expects " +
                           std::to_string(model.topology.inputs));
  }

  ModelReport& report = summary.report;
  report.model = model.meta.model;
  report.dataset = dataset_label(schema, config.dataset_path);
  report.schema_fingerprint = fingerprint;
  report.samples = p.data.size();
  report.dimension = model.topology.parameter_count();
  report.partitions.push_back(evaluate_partition("Testing", model.topology, model.params, p.test));
  summary.report_text = render([&](std::ostream& o) { write_report(o, report); });

  if (!config.output_directory.empty()) {
    const auto& testing = report.partitions.back();
    StagedOutput out(config.output_directory);
    out.add("evaluation_report.txt", summary.report_text);
    out.add("evaluation_metrics.csv", render([&](std::ostream& o) { write_metrics_csv(o, report); }));
    out.add("evaluation_roc.csv", render([&](std::ostream& o) {
              if (testing.roc) write_roc_csv(o, *testing.roc);
              else o << "threshold,fpr,tpr\n";
            }));
    out.add("evaluation_manifest.txt", render([&](std::ostream& o) {
              o << "tool = swarmnet " << kVersion << '\n';
              o << "command = evaluate\n";
              o << "experiment_id = " << summary.experiment_id << '\n';
              o << "model_path = " << config.model_path << '\n';
              o << "model = " << model.meta.model << '\n';
              o << "dataset_path = " << config.dataset_path << '\n';
              o << "schema_path = " << config.schema_path << '\n';
              o << "schema_fingerprint = " << fingerprint << '\n';
              o << "training_seed = " << model.meta.seed << '\n';
              o << "training_split_seed = " << model.meta.split_seed << '\n';
              o << "split_seed = " << summary.split_seed << '\n';
              o << "same_split_as_training = " << (summary.same_split_as_training ? "true" : "false") << '\n';
              o << "samples = " << p.data.size() << '\n';
              o << "test_samples = " << p.test.size() << '\n';
              o << "test_rate_percent = " << format_real(testing.metrics.correct_rate_percent) << '\n';
            }));
    summary.artifacts = out.commit();
  }
  return summary;
}

SearchSpace bench_space(const std::string& function, std::size_t dimension) {
  const auto name = to_lower(function);
  if (name == "sphere") return {dimension, -100.0, 100.0};
  if (name == "rastrigin") return {dimension, -5.12, 5.12};
  throw ConfigError("unknown benchmark function '" + function + "' (expected sphere or rastrigin)");
}

Objective bench_objective(const std::string& function) {
  const auto name = to_lower(function);
  if (name == "sphere") return [](std::span<const double> x) { return sphere(x); };
  if (name == "rastrigin") return [](std::span<const double> x) { return rastrigin(x); };
  throw ConfigError("unknown benchmark function '" + function + "' (expected sphere or rastrigin)");
}

RunResult run_bench(const BenchConfig& config) {
  validate_run_settings(config.optimizer, config.agents, config.iterations, config.weight_factor);
  const auto space = bench_space(config.function, config.dimension);
  const auto objective = bench_objective(config.function);
  auto strategy = make_strategy(config.optimizer, FdoConfig{config.weight_factor});
  return run(*strategy, space, OptimizerConfig{config.agents, config.iterations, config.seed, 1}, objective);
}

}  // namespace swarmnet
