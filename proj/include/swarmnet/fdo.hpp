#pragma once

#include "swarmnet/optimizer.hpp"

namespace swarmnet {

struct FdoConfig {
  // Either 0 or 1.
  double weight_factor = 0.0;

  void validate() const;
};

// |global_best / current| - weight_factor. current must be > 0 (zero fitness
// is routed to the random-walk pace by the caller) and both fitness values
// must be non-negative.
double fitness_weight(double current_fitness, double global_best_fitness, double weight_factor);

struct FdoStepResult {
  Population population;
  Agent global_best;
};

// One scout-bee pass.
//
// For each bee, in population order, the pace is chosen from its fitness
// weight fw against global_best:
//   * 0 < fw < 1 (and nonzero fitness): directed pace (x - x*) * fw, negated
//     when r < 0. One draw r in [-1, 1) for the bee.
//   * otherwise (fw <= 0, fw >= 1 or fitness == 0): random walk, pace_d = x_d * r_d
//     with one draw r_d in [-1, 1) per dimension.
// Candidates x + pace are clamped, evaluated, and accepted only when strictly
// better. global_best is fixed for the whole pass and updated afterwards.
FdoStepResult fdo_step(const Population& population, const Agent& global_best, const FdoConfig& config,
                       StepContext& ctx);

class FitnessDependentOptimizer final : public Strategy {
 public:
  explicit FitnessDependentOptimizer(FdoConfig config = {});

  std::string_view name() const override { return "FDO"; }
  std::size_t min_agents() const override { return 2; }
  Population step(const Population& population, const Agent& global_best, StepContext& ctx) override;

 private:
  FdoConfig config_;
};

}  // namespace swarmnet
