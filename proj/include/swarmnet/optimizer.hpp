#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "swarmnet/random.hpp"

namespace swarmnet {

// Axis-aligned box with the same bounds on every dimension.
struct SearchSpace {
  std::size_t dimension = 0;
  double lower = -1.0;
  double upper = 1.0;

  void validate() const;
  double clamp(double value) const { return value < lower ? lower : (value > upper ? upper : value); }
  bool contains(std::span<const double> x) const;
};

// One candidate solution. fitness is always the objective at position.
struct Agent {
  std::vector<double> position;
  double fitness = 0.0;
};

using Population = std::vector<Agent>;

struct OptimizerConfig {
  std::size_t agent_count = 10;
  std::size_t max_iterations = 50;
  std::uint64_t rng_seed = 1;
  // Worker threads for fitness evaluation. Results do not depend on it.
  unsigned threads = 1;

  void validate() const;
};

struct RunResult {
  std::vector<double> best_position;
  double best_fitness = 0.0;
  // Best-so-far fitness after each iteration; length max_iterations.
  std::vector<double> fitness_trace;
  double elapsed_seconds = 0.0;
};

// Minimized. Must be pure and reentrant: it may be called concurrently.
using Objective = std::function<double(std::span<const double>)>;

// Wraps an objective with the finiteness check and optional parallel batch
// evaluation. Non-finite values raise NumericError naming agent and iteration.
class Evaluator {
 public:
  explicit Evaluator(Objective objective, unsigned threads = 1);

  double operator()(std::span<const double> x, std::size_t agent, std::size_t iteration) const;

  // Iteration 0 is the initial population; step t evaluates as t + 1.
  // Evaluates every agent's position and stores the fitness in place.
  // Agents are independent, so the outcome is the same for any thread count.
  void evaluate(Population& population, std::size_t iteration) const;

 private:
  Objective objective_;
  unsigned threads_;
};

// Everything a step function needs besides the population itself.
struct StepContext {
  const SearchSpace& space;
  RandomSource& rng;
  const Evaluator& evaluate;
  std::size_t iteration = 0;       // zero-based
  std::size_t max_iterations = 1;
};

// An optimizer strategy advances a population by one iteration. The run
// loop owns the RNG, the best-so-far record and the trace.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string_view name() const = 0;
  virtual std::size_t min_agents() const = 0;
  // global_best is the best agent seen so far, before this step.
  virtual Population step(const Population& population, const Agent& global_best, StepContext& ctx) = 0;
};

enum class OptimizerKind { gwo, mgwo, fdo };

std::string_view to_string(OptimizerKind kind);
OptimizerKind parse_optimizer_kind(std::string_view name);

// Draw order: agent-major, dimension-minor, one uniform per component.
Population initialize_population(const SearchSpace& space, const OptimizerConfig& config,
                                 RandomSource& rng, const Evaluator& evaluate);
Population initialize_population(const SearchSpace& space, const OptimizerConfig& config,
                                 const Objective& objective);

// Index of the lowest-fitness agent; ties go to the lower index.
std::size_t best_index(const Population& population);

// Called after every iteration with the zero-based iteration index and the
// updated population. Test and diagnostics hook; must not mutate anything.
using IterationObserver = std::function<void(std::size_t, const Population&)>;

RunResult run(Strategy& strategy, const SearchSpace& space, const OptimizerConfig& config,
              const Objective& objective, const IterationObserver& observer = {});

// Benchmark objectives.
double sphere(std::span<const double> x);
double rastrigin(std::span<const double> x);

// CSV with header `iteration,best_fitness`, iterations numbered from 1.
void write_trace_csv(std::ostream& out, std::span<const double> trace);

}  // namespace swarmnet
