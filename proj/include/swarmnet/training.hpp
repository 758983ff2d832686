#pragma once

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "swarmnet/fdo.hpp"
#include "swarmnet/network.hpp"
#include "swarmnet/optimizer.hpp"

namespace swarmnet {

// Every network weight and bias is searched inside [-10, 10].
inline constexpr double kWeightBound = 10.0;

enum class ModelKind { gwo_mlp, gwo_cmlp, mgwo_mlp, fdo_mlp, fdo_cmlp };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);
OptimizerKind optimizer_of(ModelKind kind);
NetworkKind network_of(ModelKind kind);

// A network fitting task: m rows of features with targets in {1, 2}.
struct TrainingProblem {
  NetworkTopology topology;
  Matrix features;
  std::vector<double> targets;
  SearchSpace space;

  // Validates shapes and labels; the search space covers parameter_count()
  // dimensions within +-kWeightBound.
  static TrainingProblem make(NetworkTopology topology, Matrix features, std::vector<double> targets);
};

// Squared error of one row.
double sample_mse(const NetworkTopology& topology, std::span<const double> params,
                  std::span<const double> features, double target);

// Mean of sample_mse over every row, summed in row order.
double average_mse(const TrainingProblem& problem, std::span<const double> params);

std::unique_ptr<Strategy> make_strategy(OptimizerKind kind, const FdoConfig& fdo = {});

struct TrainResult {
  std::vector<double> params;
  RunResult run;
};

TrainResult train(ModelKind kind, const TrainingProblem& problem, const OptimizerConfig& config,
                  const FdoConfig& fdo = {});

}  // namespace swarmnet
