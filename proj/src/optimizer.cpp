#include "swarmnet/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>
#include <thread>

#include "format.hpp"
#include "swarmnet/error.hpp"

namespace swarmnet {

void SearchSpace::validate() const {
  if (dimension == 0) throw ConfigError("search space dimension must be at least 1");
  if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower < upper)) {
    throw ConfigError("search space bounds must be finite with lower < upper (got [" +
                      format_real(lower) + ", " + format_real(upper) + "])");
  }
}

bool SearchSpace::contains(std::span<const double> x) const {
  if (x.size() != dimension) return false;
  return std::all_of(x.begin(), x.end(), [&](double v) { return v >= lower && v <= upper; });
}

void OptimizerConfig::validate() const {
  if (agent_count < 2) throw ConfigError("agent count must be at least 2");
  if (max_iterations < 1) throw ConfigError("iteration count must be at least 1");
  if (threads < 1) throw ConfigError("thread count must be at least 1");
}

Evaluator::Evaluator(Objective objective, unsigned threads)
    : objective_(std::move(objective)), threads_(std::max(1u, threads)) {}

double Evaluator::operator()(std::span<const double> x, std::size_t agent, std::size_t iteration) const {
  const double f = objective_(x);
  if (!std::isfinite(f)) {
    throw NumericError("objective returned a non-finite value (" + format_real(f) + ") for agent " +
                       std::to_string(agent) + " at iteration " + std::to_string(iteration) +
                       (iteration == 0 ? " (initial population)" : ""));
  }
  return f;
}

void Evaluator::evaluate(Population& population, std::size_t iteration) const {
  const std::size_t n = population.size();
  const std::size_t workers = std::min<std::size_t>(threads_, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) population[i].fitness = (*this)(population[i].position, i, iteration);
    return;
  }

  // Strided partition; each slot is written by exactly one worker. The first
  // failure (lowest agent index) is rethrown so diagnostics are stable.
  std::vector<std::exception_ptr> errors(n);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) {
          try {
            population[i].fitness = (*this)(population[i].position, i, iteration);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string_view to_string(OptimizerKind kind) {
  switch (kind) {
    case OptimizerKind::gwo: return "GWO";
    case OptimizerKind::mgwo: return "MGWO";
    case OptimizerKind::fdo: return "FDO";
  }
  return "?";
}

OptimizerKind parse_optimizer_kind(std::string_view name) {
  const std::string lowered = to_lower(trim(name));
  if (lowered == "gwo") return OptimizerKind::gwo;
  if (lowered == "mgwo") return OptimizerKind::mgwo;
  if (lowered == "fdo") return OptimizerKind::fdo;
  throw ConfigError("unknown optimizer '" + std::string(name) + "' (expected gwo, mgwo or fdo)");
}

Population initialize_population(const SearchSpace& space, const OptimizerConfig& config,
                                 RandomSource& rng, const Evaluator& evaluate) {
  space.validate();
  config.validate();
  Population population(config.agent_count);
  const double width = space.upper - space.lower;
  for (auto& agent : population) {
    agent.position.resize(space.dimension);
    for (auto& x : agent.position) x = space.clamp(space.lower + width * rng.uniform());
  }
  evaluate.evaluate(population, 0);
  return population;
}

Population initialize_population(const SearchSpace& space, const OptimizerConfig& config,
                                 const Objective& objective) {
  Rng rng(config.rng_seed);
  Evaluator evaluator(objective, config.threads);
  return initialize_population(space, config, rng, evaluator);
}

std::size_t best_index(const Population& population) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].fitness < population[best].fitness) best = i;
  }
  return best;
}

RunResult run(Strategy& strategy, const SearchSpace& space, const OptimizerConfig& config,
              const Objective& objective, const IterationObserver& observer) {
  space.validate();
  config.validate();
  if (config.agent_count < strategy.min_agents()) {
    throw ConfigError(std::string(strategy.name()) + " requires at least " +
                      std::to_string(strategy.min_agents()) + " agents (got " +
                      std::to_string(config.agent_count) + ")");
  }

  Rng rng(config.rng_seed);
  Evaluator evaluator(objective, config.threads);
  Population population = initialize_population(space, config, rng, evaluator);
  Agent best = population[best_index(population)];

  RunResult result;
  result.fitness_trace.reserve(config.max_iterations);

  const auto start = std::chrono::steady_clock::now();
  for (std::size_t t = 0; t < config.max_iterations; ++t) {
    StepContext ctx{space, rng, evaluator, t, config.max_iterations};
    population = strategy.step(population, best, ctx);
    const Agent& candidate = population[best_index(population)];
    if (candidate.fitness < best.fitness) best = candidate;
    result.fitness_trace.push_back(best.fitness);
    if (observer) observer(t, population);
  }
  const auto stop = std::chrono::steady_clock::now();

  result.best_position = std::move(best.position);
  result.best_fitness = best.fitness;
  result.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
  return result;
}

double sphere(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum;
}

double rastrigin(std::span<const double> x) {
  double sum = 10.0 * static_cast<double>(x.size());
  for (double v : x) sum += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
  return sum;
}

void write_trace_csv(std::ostream& out, std::span<const double> trace) {
  out << "iteration,best_fitness\n";
  for (std::size_t i = 0; i < trace.size(); ++i) out << (i + 1) << ',' << format_real(trace[i]) << '\n';
}

}  // namespace swarmnet
