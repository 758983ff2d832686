#include "swarmnet/wolf.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "swarmnet/error.hpp"

namespace swarmnet {

WolfLeaders select_leaders(const Population& population, std::size_t count) {
  if (count != 3 && count != 4) throw ContractError("leader count must be 3 or 4");
  if (population.size() < count) {
    throw ConfigError("population of " + std::to_string(population.size()) + " cannot supply " +
                      std::to_string(count) + " leaders");
  }
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return population[i].fitness < population[j].fitness;
  });

  WolfLeaders leaders{population[order[0]], population[order[1]], population[order[2]], std::nullopt};
  if (count == 4) leaders.gamma = population[order[3]];
  return leaders;
}

double wolf_coefficient(std::size_t iteration, std::size_t max_iterations) {
  if (max_iterations == 0) throw ContractError("max_iterations must be positive");
  return 2.0 * (1.0 - static_cast<double>(iteration) / static_cast<double>(max_iterations));
}

namespace {

void check_step_inputs(const Population& population, double a, const StepContext& ctx) {
  if (!(a >= 0.0 && a <= 2.0)) throw ContractError("wolf coefficient a must lie in [0, 2]");
  for (const auto& agent : population) {
    if (agent.position.size() != ctx.space.dimension) {
      throw ContractError("agent dimension does not match the search space");
    }
  }
}

}  // namespace

Population gwo_step(const Population& population, const WolfLeaders& leaders, double a, StepContext& ctx) {
  check_step_inputs(population, a, ctx);
  const std::array<const std::vector<double>*, 3> leader_pos{&leaders.alpha.position, &leaders.beta.position,
                                                             &leaders.delta.position};
  Population next(population.size());
  for (std::size_t i = 0; i < population.size(); ++i) {
    const auto& x = population[i].position;
    auto& out = next[i].position;
    out.resize(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
      double sum = 0.0;
      for (const auto* leader : leader_pos) {
        const double A = 2.0 * a * ctx.rng.uniform() - a;
        const double C = 2.0 * ctx.rng.uniform();
        const double distance = std::abs(C * (*leader)[d] - x[d]);
        sum += (*leader)[d] - A * distance;
      }
      out[d] = ctx.space.clamp(sum / 3.0);
    }
  }
  ctx.evaluate.evaluate(next, ctx.iteration + 1);
  return next;
}

Population mgwo_step(const Population& population, const WolfLeaders& leaders, double a, StepContext& ctx) {
  if (population.size() < 4) throw ConfigError("MGWO requires a population of at least 4 agents");
  if (!leaders.gamma) throw ContractError("MGWO step requires a gamma leader");
  check_step_inputs(population, a, ctx);
  const std::array<const std::vector<double>*, 4> leader_pos{&leaders.alpha.position, &leaders.beta.position,
                                                             &leaders.delta.position, &leaders.gamma->position};
  Population next(population.size());
  for (std::size_t i = 0; i < population.size(); ++i) {
    const auto& x = population[i].position;
    auto& out = next[i].position;
    out.resize(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
      std::array<double, 4> A{};
      double distance_sum = 0.0;
      for (std::size_t k = 0; k < 4; ++k) {
        A[k] = 2.0 * a * ctx.rng.uniform() - a;
        const double C = 2.0 * ctx.rng.uniform();
        distance_sum += std::abs(C * (*leader_pos[k])[d] - x[d]);
      }
      const double mean_distance = distance_sum / 4.0;
      double sum = 0.0;
      for (std::size_t k = 0; k < 4; ++k) sum += (*leader_pos[k])[d] - A[k] * mean_distance;
      out[d] = ctx.space.clamp(sum / 4.0);
    }
  }
  ctx.evaluate.evaluate(next, ctx.iteration + 1);
  return next;
}

Population GreyWolfOptimizer::step(const Population& population, const Agent&, StepContext& ctx) {
  const auto leaders = select_leaders(population, 3);
  return gwo_step(population, leaders, wolf_coefficient(ctx.iteration, ctx.max_iterations), ctx);
}

Population ModifiedGreyWolfOptimizer::step(const Population& population, const Agent&, StepContext& ctx) {
  const auto leaders = select_leaders(population, 4);
  return mgwo_step(population, leaders, wolf_coefficient(ctx.iteration, ctx.max_iterations), ctx);
}

}  // namespace swarmnet
