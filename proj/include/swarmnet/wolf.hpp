#pragma once

#include <cstddef>
#include <optional>

#include "swarmnet/optimizer.hpp"

namespace swarmnet {

// The best three (GWO) or four (MGWO) agents of a population, ordered by
// fitness with ties broken by lower population index.
struct WolfLeaders {
  Agent alpha;
  Agent beta;
  Agent delta;
  std::optional<Agent> gamma;
};

// count must be 3 or 4 and not exceed the population size.
WolfLeaders select_leaders(const Population& population, std::size_t count);

// Exploration coefficient for zero-based iteration t of T: 2 * (1 - t / T).
double wolf_coefficient(std::size_t iteration, std::size_t max_iterations);

// One synchronous grey wolf update. Every agent moves, leaders included.
//
// RNG order: for each agent, for each dimension, for alpha, beta, delta in
// turn: r1 (A = 2a*r1 - a) then r2 (C = 2*r2). Six draws per component.
// Positions are clamped to the box, then the whole population is evaluated.
Population gwo_step(const Population& population, const WolfLeaders& leaders, double a, StepContext& ctx);

// One synchronous modified grey wolf update with the gamma leader. The four
// leader distances are averaged and that mean distance drives all four
// leader-relative moves.
//
// RNG order: for each agent, for each dimension, for alpha, beta, delta,
// gamma in turn: r1 then r2. Eight draws per component.
Population mgwo_step(const Population& population, const WolfLeaders& leaders, double a, StepContext& ctx);

class GreyWolfOptimizer final : public Strategy {
 public:
  std::string_view name() const override { return "GWO"; }
  std::size_t min_agents() const override { return 3; }
  Population step(const Population& population, const Agent& global_best, StepContext& ctx) override;
};

class ModifiedGreyWolfOptimizer final : public Strategy {
 public:
  std::string_view name() const override { return "MGWO"; }
  std::size_t min_agents() const override { return 4; }
  Population step(const Population& population, const Agent& global_best, StepContext& ctx) override;
};

}  // namespace swarmnet
