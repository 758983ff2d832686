#include "swarmnet/network.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>

#include "format.hpp"
#include "swarmnet/error.hpp"

namespace swarmnet {

std::string_view to_string(NetworkKind kind) {
  return kind == NetworkKind::mlp ? "MLP" : "CMLP";
}

NetworkKind parse_network_kind(std::string_view name) {
  const auto lowered = to_lower(trim(name));
  if (lowered == "mlp") return NetworkKind::mlp;
  if (lowered == "cmlp") return NetworkKind::cmlp;
  throw ConfigError("unknown network kind '" + std::string(name) + "' (expected MLP or CMLP)");
}

std::size_t hidden_count(std::size_t inputs) {
  if (inputs == 0) throw ContractError("network needs at least one input");
  return 2 * inputs + 1;
}

NetworkTopology NetworkTopology::for_inputs(NetworkKind kind, std::size_t inputs) {
  NetworkTopology t{kind, inputs, hidden_count(inputs), 1};
  t.validate();
  return t;
}

void NetworkTopology::validate() const {
  if (inputs == 0) throw ConfigError("network needs at least one input");
  if (hidden == 0) throw ConfigError("network needs at least one hidden neuron");
  if (outputs != 1) throw ConfigError("only single-output networks are supported (got " + std::to_string(outputs) + ")");
}

std::size_t NetworkTopology::parameter_count() const {
  const std::size_t mlp = inputs * hidden + hidden + hidden * outputs + outputs;
  return kind == NetworkKind::mlp ? mlp : mlp + inputs + 1;
}

double logistic(double z) {
  return 1.0 / (1.0 + std::exp(-z));
}

namespace {

// Caller has checked shapes.
double forward_unchecked(const NetworkTopology& t, const double* p, const double* x) {
  const std::size_t n_in = t.inputs;
  const std::size_t n_hidden = t.hidden;
  const double* w = p;
  const double* b = w + n_hidden * n_in;
  const double* v = b + n_hidden;
  const double b_out = v[n_hidden];

  double out = 0.0;
  for (std::size_t j = 0; j < n_hidden; ++j) {
    const double* wj = w + j * n_in;
    double z = 0.0;
    for (std::size_t i = 0; i < n_in; ++i) z += wj[i] * x[i];
    out += v[j] * logistic(z + b[j]);
  }
  out += b_out;

  if (t.kind == NetworkKind::cmlp) {
    const double* u = v + n_hidden + 1;
    double direct = 0.0;
    for (std::size_t i = 0; i < n_in; ++i) direct += u[i] * x[i];
    out += direct + u[n_in];
  }
  return out;
}

void check_params(const NetworkTopology& t, std::span<const double> params) {
  if (params.size() != t.parameter_count()) {
    throw ContractError("parameter vector has " + std::to_string(params.size()) + " values, topology needs " +
                        std::to_string(t.parameter_count()));
  }
}

}  // namespace

double forward(const NetworkTopology& topology, std::span<const double> params, std::span<const double> features) {
  check_params(topology, params);
  if (features.size() != topology.inputs) {
    throw ContractError("feature row has " + std::to_string(features.size()) + " values, network has " +
                        std::to_string(topology.inputs) + " inputs");
  }
  return forward_unchecked(topology, params.data(), features.data());
}

std::vector<double> forward_batch(const NetworkTopology& topology, std::span<const double> params,
                                  const Matrix& features) {
  check_params(topology, params);
  if (features.cols != topology.inputs) throw ContractError("feature matrix width does not match network inputs");
  std::vector<double> out(features.rows);
  for (std::size_t r = 0; r < features.rows; ++r) {
    out[r] = forward_unchecked(topology, params.data(), features.row(r).data());
  }
  return out;
}

int classify(double output) {
  return output < 1.5 ? 1 : 2;
}

void write_model(std::ostream& out, const ModelFile& model) {
  out << "# swarmnet model\n";
  out << "[topology]\n";
  out << "kind = " << to_string(model.topology.kind) << '\n';
  out << "inputs = " << model.topology.inputs << '\n';
  out << "hidden = " << model.topology.hidden << '\n';
  out << "outputs = " << model.topology.outputs << '\n';
  out << "[meta]\n";
  out << "model = " << model.meta.model << '\n';
  out << "optimizer = " << model.meta.optimizer << '\n';
  out << "seed = " << model.meta.seed << '\n';
  out << "split_seed = " << model.meta.split_seed << '\n';
  out << "agents = " << model.meta.agents << '\n';
  out << "iterations = " << model.meta.iterations << '\n';
  out << "weight_factor = " << format_real(model.meta.weight_factor) << '\n';
  out << "schema_fingerprint = " << model.meta.schema_fingerprint << '\n';
  out << "[params]\n";
  out << "count = " << model.params.size() << '\n';
  for (double p : model.params) out << format_real(p) << '\n';
}

namespace {

template <typename Int>
Int require_integer(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw SchemaError("model file is missing '" + key + "'");
  auto value = parse_integer<Int>(it->second);
  if (!value) throw SchemaError("model file has a malformed '" + key + "' value: " + it->second);
  return *value;
}

std::string require_string(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw SchemaError("model file is missing '" + key + "'");
  return it->second;
}

}  // namespace

ModelFile read_model(std::istream& in) {
  std::map<std::string, std::string> topology_kv;
  std::map<std::string, std::string> meta_kv;
  std::vector<double> params;
  std::optional<std::size_t> declared_count;
  std::string section;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw SchemaError("model file line " + std::to_string(line_no) + ": bad section header");
      section = std::string(text.substr(1, text.size() - 2));
      if (section != "topology" && section != "meta" && section != "params") {
        throw SchemaError("model file line " + std::to_string(line_no) + ": unknown section [" + section + "]");
      }
      continue;
    }
    if (section == "params") {
      if (text.starts_with("count")) {
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) throw SchemaError("model file: malformed params count");
        declared_count = parse_integer<std::size_t>(text.substr(eq + 1));
        if (!declared_count) throw SchemaError("model file: malformed params count");
        continue;
      }
      auto value = parse_real(text);
      if (!value || !std::isfinite(*value)) {
        throw SchemaError("model file line " + std::to_string(line_no) + ": parameter is not a finite number");
      }
      params.push_back(*value);
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || section.empty()) {
      throw SchemaError("model file line " + std::to_string(line_no) + ": expected 'key = value' inside a section");
    }
    auto key = std::string(trim(text.substr(0, eq)));
    auto value = std::string(trim(text.substr(eq + 1)));
    (section == "topology" ? topology_kv : meta_kv)[key] = value;
  }

  ModelFile model;
  model.topology.kind = parse_network_kind(require_string(topology_kv, "kind"));
  model.topology.inputs = require_integer<std::size_t>(topology_kv, "inputs");
  model.topology.hidden = require_integer<std::size_t>(topology_kv, "hidden");
  model.topology.outputs = require_integer<std::size_t>(topology_kv, "outputs");
  model.topology.validate();

  model.meta.model = require_string(meta_kv, "model");
  model.meta.optimizer = require_string(meta_kv, "optimizer");
  model.meta.seed = require_integer<std::uint64_t>(meta_kv, "seed");
  model.meta.split_seed = require_integer<std::uint64_t>(meta_kv, "split_seed");
  model.meta.agents = require_integer<std::size_t>(meta_kv, "agents");
  model.meta.iterations = require_integer<std::size_t>(meta_kv, "iterations");
  auto wf = parse_real(require_string(meta_kv, "weight_factor"));
  if (!wf) throw SchemaError("model file has a malformed 'weight_factor' value");
  model.meta.weight_factor = *wf;
  model.meta.schema_fingerprint = require_string(meta_kv, "schema_fingerprint");

  const std::size_t expected = model.topology.parameter_count();
  if (declared_count && *declared_count != params.size()) {
    throw SchemaError("model file declares " + std::to_string(*declared_count) + " parameters but lists " +
                      std::to_string(params.size()));
  }
  if (params.size() != expected) {
    throw SchemaError("model file lists " + std::to_string(params.size()) + " parameters, topology needs " +
                      std::to_string(expected));
  }
  model.params = std::move(params);
  return model;
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file '" + path + "'");
  return read_model(in);
}

}  // namespace swarmnet
