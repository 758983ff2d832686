#include "swarmnet/training.hpp"

#include <cmath>
#include <string>

#include "format.hpp"
#include "swarmnet/error.hpp"
#include "swarmnet/wolf.hpp"

namespace swarmnet {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::gwo_mlp: return "GWO_MLP";
    case ModelKind::gwo_cmlp: return "GWO_CMLP";
    case ModelKind::mgwo_mlp: return "MGWO_MLP";
    case ModelKind::fdo_mlp: return "FDO_MLP";
    case ModelKind::fdo_cmlp: return "FDO_CMLP";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view name) {
  const auto upper = [&] {
    std::string s(trim(name));
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
  }();
  for (auto kind : {ModelKind::gwo_mlp, ModelKind::gwo_cmlp, ModelKind::mgwo_mlp, ModelKind::fdo_mlp,
                    ModelKind::fdo_cmlp}) {
    if (upper == to_string(kind)) return kind;
  }
  throw ConfigError("unknown model '" + std::string(name) +
                    "' (expected GWO_MLP, GWO_CMLP, MGWO_MLP, FDO_MLP or FDO_CMLP)");
}

OptimizerKind optimizer_of(ModelKind kind) {
  switch (kind) {
    case ModelKind::gwo_mlp:
    case ModelKind::gwo_cmlp: return OptimizerKind::gwo;
    case ModelKind::mgwo_mlp: return OptimizerKind::mgwo;
    case ModelKind::fdo_mlp:
    case ModelKind::fdo_cmlp: return OptimizerKind::fdo;
  }
  return OptimizerKind::gwo;
}

NetworkKind network_of(ModelKind kind) {
  return (kind == ModelKind::gwo_cmlp || kind == ModelKind::fdo_cmlp) ? NetworkKind::cmlp : NetworkKind::mlp;
}

TrainingProblem TrainingProblem::make(NetworkTopology topology, Matrix features, std::vector<double> targets) {
  topology.validate();
  if (features.rows == 0) throw ConfigError("training set is empty");
  if (features.cols != topology.inputs) {
    throw ConfigError("training matrix has " + std::to_string(features.cols) + " columns, network has " +
                      std::to_string(topology.inputs) + " inputs");
  }
  if (targets.size() != features.rows) throw ConfigError("training targets and feature rows differ in length");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] != 1.0 && targets[i] != 2.0) {
      throw ConfigError("training target " + std::to_string(i) + " is " + format_real(targets[i]) +
                        ", expected 1 or 2");
    }
  }
  SearchSpace space{topology.parameter_count(), -kWeightBound, kWeightBound};
  return TrainingProblem{topology, std::move(features), std::move(targets), space};
}

double sample_mse(const NetworkTopology& topology, std::span<const double> params,
                  std::span<const double> features, double target) {
  const double residual = target - forward(topology, params, features);
  return residual * residual;
}

double average_mse(const TrainingProblem& problem, std::span<const double> params) {
  const std::size_t m = problem.features.rows;
  if (m == 0) throw ConfigError("training set is empty");
  const auto outputs = forward_batch(problem.topology, params, problem.features);
  double sum = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double residual = problem.targets[j] - outputs[j];
    sum += residual * residual;
  }
  return sum / static_cast<double>(m);
}

std::unique_ptr<Strategy> make_strategy(OptimizerKind kind, const FdoConfig& fdo) {
  switch (kind) {
    case OptimizerKind::gwo: return std::make_unique<GreyWolfOptimizer>();
    case OptimizerKind::mgwo: return std::make_unique<ModifiedGreyWolfOptimizer>();
    case OptimizerKind::fdo: return std::make_unique<FitnessDependentOptimizer>(fdo);
  }
  throw ContractError("unknown optimizer kind");
}

TrainResult train(ModelKind kind, const TrainingProblem& problem, const OptimizerConfig& config,
                  const FdoConfig& fdo) {
  if (problem.topology.kind != network_of(kind)) {
    throw ConfigError(std::string(to_string(kind)) + " needs a " + std::string(to_string(network_of(kind))) +
                      " topology");
  }
  auto strategy = make_strategy(optimizer_of(kind), fdo);
  auto objective = [&problem](std::span<const double> params) { return average_mse(problem, params); };
  TrainResult result;
  result.run = run(*strategy, problem.space, config, objective);
  result.params = result.run.best_position;
  return result;
}

}  // namespace swarmnet
