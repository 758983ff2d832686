#include "doctest.h"

#include <cstdlib>
#include <filesystem>

#include "swarmnet/error.hpp"
#include "swarmnet/experiment.hpp"
#include "synthetic.hpp"

using namespace swarmnet;
namespace fs = std::filesystem;
using testing::slurp;
using testing::spit;

namespace {

struct Fixture {
  testing::TempDir dir{"experiment"};
  std::string csv = (dir / "data.csv").string();
  std::string schema = (dir / "data.schema").string();

  Fixture() {
    const auto features = testing::numbered_features(4);
    spit(csv, testing::symptom_csv(features, "label", 300, 5));
    spit(schema, testing::symptom_schema(features, "label"));
  }

  ExperimentConfig config(const std::string& out, ModelKind model = ModelKind::gwo_mlp) const {
    ExperimentConfig c;
    c.dataset_path = csv;
    c.schema_path = schema;
    c.model = model;
    c.iterations = 8;
    c.seed = 3;
    c.split_seed = 9;
    c.output_directory = (dir / out).string();
    return c;
  }
};

std::string without_elapsed(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("elapsed_seconds", 0) != 0) out += line + '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("defaults are 10 agents, 50 iterations and weight factor 0") {
  const ExperimentConfig c;
  CHECK(c.agents == 10);
  CHECK(c.iterations == 50);
  CHECK(c.weight_factor == 0.0);
  CHECK(c.model == ModelKind::gwo_mlp);
}

TEST_CASE("output directory resolution") {
  CHECK(resolve_output_directory("given") == "given");
  ::unsetenv(kOutputDirEnv);
  CHECK(resolve_output_directory("") == "swarmnet-out");
  ::setenv(kOutputDirEnv, "/tmp/from-env", 1);
  CHECK(resolve_output_directory("") == "/tmp/from-env");
  CHECK(resolve_output_directory("x") == "x");
  ::unsetenv(kOutputDirEnv);
}

TEST_CASE("train writes every artifact and a complete manifest") {
  Fixture f;
  auto c = f.config("run");
  c.export_encoded = true;
  const auto s = run_train(c);
  for (const char* name : {"model.txt", "trace.csv", "report.txt", "metrics.csv", "roc.csv", "encoded.csv", "manifest.txt"}) {
    CHECK(fs::exists(fs::path(s.output_directory) / name));
  }
  for (const auto& entry : fs::directory_iterator(s.output_directory)) {
    CHECK(entry.path().extension() != ".partial");
  }
  const auto manifest = slurp(fs::path(s.output_directory) / "manifest.txt");
  for (const char* key : {"model = GWO_MLP", "dimension = 55", "agents = 10", "iterations = 8", "seed = 3",
                          "split_seed = 9", "weight_factor = 0", "rows_read = 300", "dropped_missing = 3",
                          "elapsed_seconds = "}) {
    CHECK_MESSAGE(manifest.find(key) != std::string::npos, std::string(key));
  }
  CHECK(s.load_stats.rows_read == 300);
  CHECK(s.report.partitions.size() == 2);
  CHECK(s.report.partitions[0].partition == "Training");
  CHECK(s.report.partitions[1].partition == "Testing");
  const auto trace = slurp(fs::path(s.output_directory) / "trace.csv");
  CHECK(std::count(trace.begin(), trace.end(), '\n') == 9);

  const auto model = load_model((fs::path(s.output_directory) / "model.txt").string());
  CHECK(model.params == s.result.params);
  CHECK(model.meta.seed == 3);
  CHECK(model.meta.split_seed == 9);
}

TEST_CASE("identical configurations give byte-identical artifacts") {
  Fixture f;
  const auto a = run_train(f.config("a", ModelKind::fdo_cmlp));
  const auto b = run_train(f.config("b", ModelKind::fdo_cmlp));
  for (const char* name : {"model.txt", "trace.csv", "report.txt", "metrics.csv", "roc.csv"}) {
    CHECK(slurp(fs::path(a.output_directory) / name) == slurp(fs::path(b.output_directory) / name));
  }
  // Manifests differ only in the output-independent elapsed time.
  CHECK(without_elapsed(slurp(fs::path(a.output_directory) / "manifest.txt")) ==
        without_elapsed(slurp(fs::path(b.output_directory) / "manifest.txt")));
}

TEST_CASE("invalid settings fail before any file is written") {
  Fixture f;
  auto c = f.config("bad", ModelKind::mgwo_mlp);
  c.agents = 3;
  CHECK_THROWS_AS(run_train(c), ConfigError);
  c.agents = 4;
  c.weight_factor = 0.3;
  CHECK_THROWS_AS(run_train(c), ConfigError);
  c.weight_factor = 0;
  c.iterations = 0;
  CHECK_THROWS_AS(run_train(c), ConfigError);
  CHECK_FALSE(fs::exists(f.dir / "bad"));

  auto missing = f.config("missing");
  missing.dataset_path = (f.dir / "nope.csv").string();
  CHECK_THROWS_AS(run_train(missing), IoError);
  CHECK_FALSE(fs::exists(f.dir / "missing"));
}

TEST_CASE("mgwo accepts exactly four agents") {
  Fixture f;
  auto c = f.config("four", ModelKind::mgwo_mlp);
  c.agents = 4;
  c.iterations = 2;
  CHECK_NOTHROW(run_train(c));
}

TEST_CASE("unwritable output directory leaves nothing behind") {
  Fixture f;
  spit(f.dir / "blocker", "not a directory");
  auto c = f.config("blocker/out");
  CHECK_THROWS_AS(run_train(c), IoError);
}

TEST_CASE("evaluation reproduces the training run's test metrics") {
  Fixture f;
  const auto t = run_train(f.config("run"));
  EvaluateConfig e;
  e.model_path = (fs::path(t.output_directory) / "model.txt").string();
  e.dataset_path = f.csv;
  e.schema_path = f.schema;
  const auto r = run_evaluate(e);
  CHECK(r.same_split_as_training);
  CHECK(r.split_seed == 9);
  REQUIRE(r.report.partitions.size() == 1);
  const auto& a = r.report.partitions[0];
  const auto& b = t.report.partitions[1];
  CHECK(a.cm == b.cm);
  CHECK(a.metrics.mse == b.metrics.mse);
  CHECK(a.metrics.accuracy == b.metrics.accuracy);
  CHECK(a.outputs == b.outputs);
  CHECK(r.artifacts.empty());

  e.output_directory = (f.dir / "eval").string();
  e.split_seed = 10;
  const auto r2 = run_evaluate(e);
  CHECK_FALSE(r2.same_split_as_training);
  CHECK(r2.experiment_id != r.experiment_id);
  CHECK(r2.experiment_id.find("split10") != std::string::npos);
  const auto manifest = slurp(f.dir / "eval" / "evaluation_manifest.txt");
  CHECK(manifest.find("same_split_as_training = false") != std::string::npos);
  CHECK(manifest.find("experiment_id = " + r2.experiment_id) != std::string::npos);
}

TEST_CASE("a renamed column is schema drift") {
  Fixture f;
  const auto t = run_train(f.config("run"));
  auto text = slurp(f.schema);
  text.replace(text.find("s2"), 2, "s2_renamed");
  const auto drifted = (f.dir / "drifted.schema").string();
  spit(drifted, text);
  EvaluateConfig e;
  e.model_path = (fs::path(t.output_directory) / "model.txt").string();
  e.dataset_path = f.csv;
  e.schema_path = drifted;
  CHECK_THROWS_AS(run_evaluate(e), SchemaDriftError);
}

TEST_CASE("bench runs every optimizer on both functions") {
  for (auto opt : {OptimizerKind::gwo, OptimizerKind::mgwo, OptimizerKind::fdo}) {
    for (const char* fn : {"sphere", "rastrigin"}) {
      BenchConfig c;
      c.optimizer = opt;
      c.function = fn;
      const auto r = run_bench(c);
      CHECK(r.fitness_trace.size() == 50);
      for (std::size_t i = 1; i < r.fitness_trace.size(); ++i) CHECK(r.fitness_trace[i] <= r.fitness_trace[i - 1]);
    }
  }
  BenchConfig c;
  c.function = "ackley";
  CHECK_THROWS_AS(run_bench(c), ConfigError);
  CHECK(bench_space("Rastrigin", 3).upper == 5.12);
}
