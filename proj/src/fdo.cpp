#include "swarmnet/fdo.hpp"

#include <cmath>

#include "format.hpp"
#include "swarmnet/error.hpp"

namespace swarmnet {

void FdoConfig::validate() const {
  if (weight_factor != 0.0 && weight_factor != 1.0) {
    throw ConfigError("FDO weight factor must be 0 or 1 (got " + format_real(weight_factor) + ")");
  }
}

double fitness_weight(double current_fitness, double global_best_fitness, double weight_factor) {
  if (current_fitness < 0.0 || global_best_fitness < 0.0) {
    throw ContractError("fitness weight requires non-negative fitness values");
  }
  if (current_fitness == 0.0) throw ContractError("fitness weight is undefined for zero current fitness");
  return std::abs(global_best_fitness / current_fitness) - weight_factor;
}

FdoStepResult fdo_step(const Population& population, const Agent& global_best, const FdoConfig& config,
                       StepContext& ctx) {
  config.validate();
  const auto& best = global_best.position;
  if (best.size() != ctx.space.dimension) throw ContractError("global best dimension does not match the search space");

  Population candidates(population.size());
  for (std::size_t i = 0; i < population.size(); ++i) {
    const auto& bee = population[i];
    const auto& x = bee.position;
    if (x.size() != ctx.space.dimension) throw ContractError("bee dimension does not match the search space");
    auto& candidate = candidates[i].position;
    candidate.resize(x.size());

    bool directed = false;
    double fw = 0.0;
    if (bee.fitness != 0.0) {
      fw = fitness_weight(bee.fitness, global_best.fitness, config.weight_factor);
      directed = fw > 0.0 && fw < 1.0;
    }

    if (directed) {
      const double sign = ctx.rng.symmetric() < 0.0 ? -1.0 : 1.0;
      for (std::size_t d = 0; d < x.size(); ++d) {
        candidate[d] = ctx.space.clamp(x[d] + (x[d] - best[d]) * fw * sign);
      }
    } else {
      for (std::size_t d = 0; d < x.size(); ++d) {
        candidate[d] = ctx.space.clamp(x[d] + x[d] * ctx.rng.symmetric());
      }
    }
  }

  ctx.evaluate.evaluate(candidates, ctx.iteration + 1);

  FdoStepResult result{population, global_best};
  for (std::size_t i = 0; i < population.size(); ++i) {
    if (candidates[i].fitness < population[i].fitness) result.population[i] = std::move(candidates[i]);
  }
  const auto& improved = result.population[best_index(result.population)];
  if (improved.fitness < result.global_best.fitness) result.global_best = improved;
  return result;
}

FitnessDependentOptimizer::FitnessDependentOptimizer(FdoConfig config) : config_(config) {
  config_.validate();
}

Population FitnessDependentOptimizer::step(const Population& population, const Agent& global_best,
                                           StepContext& ctx) {
  return fdo_step(population, global_best, config_, ctx).population;
}

}  // namespace swarmnet
