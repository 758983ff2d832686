#include "doctest.h"

#include <cmath>
#include <sstream>

#include "swarmnet/error.hpp"
#include "swarmnet/network.hpp"
#include "swarmnet/random.hpp"
#include "support.hpp"

using namespace swarmnet;

namespace {

std::vector<double> random_params(std::size_t n, Rng& rng, double scale = 10.0) {
  std::vector<double> p(n);
  for (auto& v : p) v = scale * (2.0 * rng.uniform() - 1.0);
  return p;
}

// Forward pass written straight from the wiring, using the documented layout.
double reference_forward(const NetworkTopology& t, const std::vector<double>& p, const std::vector<double>& x) {
  const std::size_t I = t.inputs, H = t.hidden;
  const double* w = p.data();
  const double* b = w + H * I;
  const double* v = b + H;
  const double b_out = v[H];
  double y = b_out;
  for (std::size_t j = 0; j < H; ++j) {
    double z = b[j];
    for (std::size_t i = 0; i < I; ++i) z += w[j * I + i] * x[i];
    y += v[j] / (1.0 + std::exp(-z));
  }
  if (t.kind == NetworkKind::cmlp) {
    const double* u = v + H + 1;
    for (std::size_t i = 0; i < I; ++i) y += u[i] * x[i];
    y += u[I];
  }
  return y;
}

}  // namespace

TEST_CASE("hidden layer width follows 2n + 1") {
  CHECK(hidden_count(10) == 21);
  CHECK(hidden_count(18) == 37);
  CHECK(hidden_count(13) == 27);
  CHECK(hidden_count(1) == 3);
}

TEST_CASE("parameter counts for the three dataset shapes") {
  const std::pair<std::size_t, std::size_t> mlp[] = {{10, 253}, {18, 741}, {13, 406}};
  const std::pair<std::size_t, std::size_t> cmlp[] = {{10, 264}, {18, 760}, {13, 420}};
  for (auto [inputs, count] : mlp) CHECK(NetworkTopology::for_inputs(NetworkKind::mlp, inputs).parameter_count() == count);
  for (auto [inputs, count] : cmlp) CHECK(NetworkTopology::for_inputs(NetworkKind::cmlp, inputs).parameter_count() == count);
}

TEST_CASE("parameter count formula holds for arbitrary shapes") {
  for (std::size_t i = 1; i < 30; ++i) {
    for (std::size_t h = 1; h < 30; h += 3) {
      const NetworkTopology m{NetworkKind::mlp, i, h, 1};
      const NetworkTopology c{NetworkKind::cmlp, i, h, 1};
      CHECK(m.parameter_count() == i * h + h + h + 1);
      CHECK(c.parameter_count() == m.parameter_count() + i + 1);
    }
  }
}

TEST_CASE("topology validation") {
  CHECK_THROWS_AS((NetworkTopology{NetworkKind::mlp, 0, 3, 1}.validate()), ConfigError);
  CHECK_THROWS_AS((NetworkTopology{NetworkKind::mlp, 2, 0, 1}.validate()), ConfigError);
  CHECK_THROWS_AS((NetworkTopology{NetworkKind::mlp, 2, 5, 2}.validate()), ConfigError);
  CHECK_THROWS_AS(NetworkTopology::for_inputs(NetworkKind::mlp, 0), ContractError);
  CHECK(parse_network_kind("cmlp") == NetworkKind::cmlp);
  CHECK(to_string(NetworkKind::mlp) == "MLP");
  CHECK_THROWS_AS(parse_network_kind("rnn"), ConfigError);
}

TEST_CASE("forward examples") {
  const auto t = NetworkTopology::for_inputs(NetworkKind::mlp, 4);
  const std::vector<double> zeros(t.parameter_count(), 0.0);
  CHECK(forward(t, zeros, std::vector<double>{1, 2, 3, 4}) == 0.0);

  const NetworkTopology one{NetworkKind::mlp, 1, 1, 1};
  // w, b, v, b_out
  const std::vector<double> p{0.0, 0.0, 2.0, 1.0};
  CHECK(forward(one, p, std::vector<double>{1.0}) == 2.0);

  const NetworkTopology cone{NetworkKind::cmlp, 1, 1, 1};
  const std::vector<double> cp{0.0, 0.0, 2.0, 1.0, 3.0, 0.5};
  CHECK(forward(cone, cp, std::vector<double>{1.0}) == 5.5);
}

TEST_CASE("forward rejects mismatched shapes") {
  const auto t = NetworkTopology::for_inputs(NetworkKind::mlp, 2);
  const std::vector<double> p(t.parameter_count(), 0.1);
  CHECK_THROWS_AS(forward(t, p, std::vector<double>{1.0}), ContractError);
  CHECK_THROWS_AS(forward(t, std::vector<double>(3, 0.0), std::vector<double>{1.0, 2.0}), ContractError);
  CHECK_THROWS_AS(forward_batch(t, p, Matrix(3, 5)), ContractError);
}

TEST_CASE("forward matches the reference wiring on random parameters") {
  Rng rng(2024);
  for (NetworkKind kind : {NetworkKind::mlp, NetworkKind::cmlp}) {
    for (std::size_t inputs : {1u, 3u, 10u, 18u}) {
      const auto t = NetworkTopology::for_inputs(kind, inputs);
      for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_params(t.parameter_count(), rng);
        const auto x = random_params(inputs, rng, 1.0);
        CHECK(forward(t, p, x) == doctest::Approx(reference_forward(t, p, x)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("cmlp with zero cascade terms equals mlp") {
  Rng rng(7);
  for (std::size_t inputs : {2u, 10u, 13u}) {
    const auto m = NetworkTopology::for_inputs(NetworkKind::mlp, inputs);
    const auto c = NetworkTopology::for_inputs(NetworkKind::cmlp, inputs);
    for (int trial = 0; trial < 10; ++trial) {
      auto p = random_params(m.parameter_count(), rng);
      const auto x = random_params(inputs, rng, 1.0);
      const double y = forward(m, p, x);
      p.resize(c.parameter_count(), 0.0);
      CHECK(std::fabs(forward(c, p, x) - y) <= 1e-12);
    }
  }
}

TEST_CASE("batch forward equals row-by-row forward") {
  Rng rng(9);
  const auto t = NetworkTopology::for_inputs(NetworkKind::cmlp, 5);
  const auto p = random_params(t.parameter_count(), rng);
  Matrix x(40, 5);
  for (auto& v : x.data) v = rng.uniform() < 0.5 ? 0.0 : 1.0;
  const auto batch = forward_batch(t, p, x);
  REQUIRE(batch.size() == 40);
  for (std::size_t r = 0; r < 40; ++r) CHECK(batch[r] == forward(t, p, x.row(r)));
}

TEST_CASE("logistic stays inside (0, 1)") {
  CHECK(logistic(0.0) == 0.5);
  for (double z : {-30.0, -5.0, -0.1, 0.1, 5.0, 30.0}) {
    CHECK(logistic(z) > 0.0);
    CHECK(logistic(z) < 1.0);
  }
  CHECK(logistic(-800.0) >= 0.0);
  CHECK(logistic(800.0) <= 1.0);
}

TEST_CASE("classification threshold") {
  CHECK(classify(1.0) == 1);
  CHECK(classify(2.0) == 2);
  CHECK(classify(1.5) == 2);
  CHECK(classify(1.4999999) == 1);
  CHECK(classify(-3.0) == 1);
  CHECK(classify(7.0) == 2);
}

namespace {

ModelFile sample_model() {
  Rng rng(31);
  ModelFile m;
  m.topology = NetworkTopology::for_inputs(NetworkKind::cmlp, 3);
  m.meta = ModelMeta{"FDO_CMLP", "FDO", 17, 4, 10, 50, 0.0, "0123456789abcdef"};
  m.params = random_params(m.topology.parameter_count(), rng);
  m.params[0] = 1e-300;
  m.params[1] = -0.1;
  return m;
}

}  // namespace

TEST_CASE("model file round-trips exactly") {
  const auto m = sample_model();
  std::stringstream ss;
  write_model(ss, m);
  const auto back = read_model(ss);
  CHECK(back == m);

  std::stringstream again;
  write_model(again, back);
  std::stringstream first;
  write_model(first, m);
  CHECK(again.str() == first.str());
}

TEST_CASE("model reader validates structure and length") {
  const auto m = sample_model();
  std::stringstream ss;
  write_model(ss, m);
  const std::string text = ss.str();

  {
    // Drop the last parameter line.
    std::string cut = text.substr(0, text.rfind('\n', text.size() - 2) + 1);
    std::istringstream in(cut);
    CHECK_THROWS_AS(read_model(in), SchemaError);
  }
  {
    std::string bad = text;
    bad.replace(bad.find("inputs = 3"), 10, "inputs = 4");
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_model(in), SchemaError);
  }
  {
    std::string bad = text;
    bad.replace(bad.find("[meta]"), 6, "[other]");
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_model(in), SchemaError);
  }
  {
    std::string bad = text + "nan\n";
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_model(in), SchemaError);
  }
  {
    std::istringstream in("");
    CHECK_THROWS_AS(read_model(in), SchemaError);
  }
  CHECK_THROWS_AS(load_model("/nonexistent/model.txt"), IoError);
}
