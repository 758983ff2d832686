#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swarmnet {

// Dense row-major matrix of doubles.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

enum class NetworkKind { mlp, cmlp };

std::string_view to_string(NetworkKind kind);
NetworkKind parse_network_kind(std::string_view name);

// Hidden layer width rule: 2 * inputs + 1.
std::size_t hidden_count(std::size_t inputs);

// Single hidden layer (logistic) with one linear output. CMLP adds direct
// input->output weights and an auxiliary output bias.
//
// Flat parameter layout:
//   [hidden * inputs]  input->hidden weights, row-major by hidden neuron
//   [hidden]           hidden biases
//   [hidden]           hidden->output weights
//   [1]                output bias
//   CMLP only:
//   [inputs]           input->output direct weights
//   [1]                auxiliary output bias
struct NetworkTopology {
  NetworkKind kind = NetworkKind::mlp;
  std::size_t inputs = 1;
  std::size_t hidden = 3;
  std::size_t outputs = 1;

  // Hidden width from the 2 * inputs + 1 rule.
  static NetworkTopology for_inputs(NetworkKind kind, std::size_t inputs);

  void validate() const;
  std::size_t parameter_count() const;

  friend bool operator==(const NetworkTopology&, const NetworkTopology&) = default;
};

double logistic(double z);

// Raw network output for one feature row.
double forward(const NetworkTopology& topology, std::span<const double> params, std::span<const double> features);

// One output per row of features.
std::vector<double> forward_batch(const NetworkTopology& topology, std::span<const double> params,
                                  const Matrix& features);

// Nearest encoded label: 1 below 1.5, otherwise 2.
int classify(double output);

struct ModelMeta {
  std::string model;         // e.g. FDO_MLP
  std::string optimizer;     // GWO, MGWO or FDO
  std::uint64_t seed = 0;
  std::uint64_t split_seed = 0;
  std::size_t agents = 0;
  std::size_t iterations = 0;
  double weight_factor = 0.0;
  std::string schema_fingerprint;

  friend bool operator==(const ModelMeta&, const ModelMeta&) = default;
};

// Trained network as persisted on disk.
struct ModelFile {
  NetworkTopology topology;
  ModelMeta meta;
  std::vector<double> params;

  friend bool operator==(const ModelFile&, const ModelFile&) = default;
};

// Text format with [topology], [meta] and [params] sections; parameters are
// written one per line in shortest round-trip form.
void write_model(std::ostream& out, const ModelFile& model);
ModelFile read_model(std::istream& in);
ModelFile load_model(const std::string& path);

}  // namespace swarmnet
