#include "doctest.h"

#include <array>
#include <cmath>

#include "swarmnet/error.hpp"
#include "swarmnet/wolf.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace swarmnet;
using namespace swarmnet::oracle;
using swarmnet::testing::ScriptedRandom;

namespace {

Population make_population(const std::vector<std::vector<double>>& positions, const Objective& f) {
  Population pop;
  for (const auto& p : positions) pop.push_back(Agent{p, f(p)});
  return pop;
}

}  // namespace

TEST_CASE("wolf coefficient decreases linearly from 2") {
  CHECK(wolf_coefficient(0, 50) == 2.0);
  CHECK(wolf_coefficient(25, 50) == 1.0);
  CHECK(wolf_coefficient(49, 50) == doctest::Approx(0.04));
  CHECK_THROWS_AS(wolf_coefficient(0, 0), ContractError);
  for (std::size_t t = 0; t < 50; ++t) {
    const double a = wolf_coefficient(t, 50);
    CHECK(a > 0.0);
    CHECK(a <= 2.0);
  }
}

TEST_CASE("leaders are the best agents in fitness order with stable ties") {
  const auto pop = make_population({{5}, {1}, {3}, {-1}, {2}}, [](std::span<const double> x) { return std::fabs(x[0]); });
  const auto l = select_leaders(pop, 4);
  CHECK(l.alpha.position[0] == 1);
  CHECK(l.beta.position[0] == -1);
  CHECK(l.delta.position[0] == 2);
  REQUIRE(l.gamma.has_value());
  CHECK(l.gamma->position[0] == 3);
  CHECK_FALSE(select_leaders(pop, 3).gamma.has_value());
  CHECK_THROWS_AS(select_leaders(pop, 5), ContractError);
  CHECK_THROWS_AS(select_leaders(Population(2), 3), ConfigError);
}

TEST_CASE("gwo step matches the leader-by-leader transcription") {
  const SearchSpace space{2, -100, 100};
  const std::vector<std::vector<double>> X{{1.0, -2.0}, {3.0, 0.5}, {-1.5, 2.5}};
  const auto pop = make_population(X, sphere);
  const auto leaders = select_leaders(pop, 3);
  const double a = 1.3;
  const auto r = stream(3 * 2 * 3 * 2, 0.42);

  ScriptedRandom rng(r);
  Evaluator eval(sphere);
  StepContext ctx{space, rng, eval, 4, 10};
  const auto next = gwo_step(pop, leaders, a, ctx);
  CHECK(rng.remaining() == 0);

  const auto expected = gwo_oracle(X, {leaders.alpha.position, leaders.beta.position, leaders.delta.position}, a, r);
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t d = 0; d < 2; ++d) CHECK(std::fabs(next[i].position[d] - expected[i][d]) <= 1e-12);
    CHECK(next[i].fitness == sphere(next[i].position));
  }
}

TEST_CASE("mgwo step matches the averaged-distance transcription") {
  const SearchSpace space{2, -100, 100};
  const std::vector<std::vector<double>> X{{1.0, -2.0}, {3.0, 0.5}, {-1.5, 2.5}, {0.25, -0.75}};
  const auto pop = make_population(X, sphere);
  const auto leaders = select_leaders(pop, 4);
  const double a = 0.9;
  const auto r = stream(4 * 2 * 4 * 2, 0.17);

  ScriptedRandom rng(r);
  Evaluator eval(sphere);
  StepContext ctx{space, rng, eval, 3, 10};
  const auto next = mgwo_step(pop, leaders, a, ctx);
  CHECK(rng.remaining() == 0);

  const auto expected = mgwo_oracle(
      X, {leaders.alpha.position, leaders.beta.position, leaders.delta.position, leaders.gamma->position}, a, r);
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t d = 0; d < 2; ++d) CHECK(std::fabs(next[i].position[d] - expected[i][d]) <= 1e-12);
  }
}

TEST_CASE("mgwo moves every leader term by the same mean distance") {
  // With A fixed by r1 = 1 (A = a) the update is mean(L) - a * mean(D).
  const SearchSpace space{1, -100, 100};
  const std::vector<std::vector<double>> X{{2.0}, {-1.0}, {0.5}, {4.0}};
  const auto pop = make_population(X, sphere);
  const auto leaders = select_leaders(pop, 4);
  const double Ls[4] = {leaders.alpha.position[0], leaders.beta.position[0], leaders.delta.position[0],
                        leaders.gamma->position[0]};
  const double c2[4] = {0.1, 0.3, 0.6, 0.9};
  std::vector<double> r;
  for (std::size_t i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      r.push_back(0.75);  // A = 2a*0.75 - a = a/2
      r.push_back(c2[k]);
    }
  ScriptedRandom rng(r);
  Evaluator eval(sphere);
  StepContext ctx{space, rng, eval, 0, 1};
  const double a = 1.0;
  const auto next = mgwo_step(pop, leaders, a, ctx);
  const double mean_leader = (Ls[0] + Ls[1] + Ls[2] + Ls[3]) / 4;
  for (std::size_t i = 0; i < 4; ++i) {
    double dsum = 0;
    for (int k = 0; k < 4; ++k) dsum += std::fabs(2 * c2[k] * Ls[k] - X[i][0]);
    CHECK(next[i].position[0] == doctest::Approx(mean_leader - 0.5 * dsum / 4).epsilon(1e-14));
  }
}

TEST_CASE("with a = 0 both wolf steps collapse onto the leader centroid") {
  const SearchSpace space{2, -100, 100};
  const std::vector<std::vector<double>> X{{1.0, -2.0}, {3.0, 0.5}, {-1.5, 2.5}, {0.25, -0.75}, {7, 7}};
  const auto pop = make_population(X, sphere);
  Evaluator eval(sphere);

  const auto l3 = select_leaders(pop, 3);
  ScriptedRandom r3(stream(5 * 2 * 6, 0.3));
  StepContext c3{space, r3, eval, 0, 1};
  const auto g = gwo_step(pop, l3, 0.0, c3);
  for (const auto& agent : g) {
    for (std::size_t d = 0; d < 2; ++d) {
      const double centroid = (l3.alpha.position[d] + l3.beta.position[d] + l3.delta.position[d]) / 3;
      CHECK(std::fabs(agent.position[d] - centroid) <= 1e-12);
    }
  }

  const auto l4 = select_leaders(pop, 4);
  ScriptedRandom r4(stream(5 * 2 * 8, 0.6));
  StepContext c4{space, r4, eval, 0, 1};
  const auto m = mgwo_step(pop, l4, 0.0, c4);
  for (const auto& agent : m) {
    for (std::size_t d = 0; d < 2; ++d) {
      const double centroid =
          (l4.alpha.position[d] + l4.beta.position[d] + l4.delta.position[d] + l4.gamma->position[d]) / 4;
      CHECK(std::fabs(agent.position[d] - centroid) <= 1e-12);
    }
  }
}

TEST_CASE("wolf steps clamp to the search box") {
  const SearchSpace space{1, -1, 1};
  const auto pop = make_population({{0.9}, {-0.9}, {0.95}}, sphere);
  const auto leaders = select_leaders(pop, 3);
  // r1 = 0 gives A = -a, pushing every term outward.
  std::vector<double> r(3 * 6);
  for (std::size_t i = 0; i < r.size(); i += 2) {
    r[i] = 0.0;
    r[i + 1] = 0.999;
  }
  ScriptedRandom rng(r);
  Evaluator eval(sphere);
  StepContext ctx{space, rng, eval, 0, 1};
  const auto next = gwo_step(pop, leaders, 2.0, ctx);
  for (const auto& agent : next) CHECK(space.contains(agent.position));
}

TEST_CASE("wolf step preconditions") {
  const SearchSpace space{1, -1, 1};
  const auto pop = make_population({{0.1}, {0.2}, {0.3}}, sphere);
  const auto leaders = select_leaders(pop, 3);
  ScriptedRandom rng{0.5};
  Evaluator eval(sphere);
  StepContext ctx{space, rng, eval, 0, 1};
  CHECK_THROWS_AS(gwo_step(pop, leaders, 2.5, ctx), ContractError);
  CHECK_THROWS_AS(gwo_step(pop, leaders, -0.1, ctx), ContractError);
  CHECK_THROWS_AS(mgwo_step(pop, leaders, 1.0, ctx), ConfigError);
}

TEST_CASE("gwo and mgwo improve on sphere for several seeds") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    OptimizerConfig config;
    config.rng_seed = seed;
    const SearchSpace space{10, -100, 100};
    const auto init = initialize_population(space, config, sphere);
    const double initial_best = init[best_index(init)].fitness;
    GreyWolfOptimizer gwo;
    ModifiedGreyWolfOptimizer mgwo;
    CHECK(run(gwo, space, config, sphere).best_fitness < initial_best);
    CHECK(run(mgwo, space, config, sphere).best_fitness < initial_best);
  }
}
