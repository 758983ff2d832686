#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swarmnet/dataset.hpp"
#include "swarmnet/network.hpp"

namespace swarmnet {

// Positive class is encoded label 1, negative is 2.
struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;
  std::uint64_t fp = 0;

  std::uint64_t positives() const { return tp + fn; }
  std::uint64_t negatives() const { return tn + fp; }
  std::uint64_t total() const { return tp + fn + tn + fp; }

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

ConfusionMatrix confusion(std::span<const int> truth, std::span<const int> predicted);

// Bits set in MetricSet::degenerate when a ratio had a zero denominator and
// was reported as 1.
enum DegenerateRatio : unsigned {
  kDegenerateSensitivity = 1u << 0,
  kDegenerateSpecificity = 1u << 1,
  kDegeneratePpv = 1u << 2,
  kDegenerateNpv = 1u << 3,
};

struct MetricSet {
  double sensitivity = 0.0;
  double specificity = 0.0;
  double ppv = 0.0;
  double npv = 0.0;
  double accuracy = 0.0;
  double correct_rate_percent = 0.0;
  double mse = 0.0;
  unsigned degenerate = 0;
};

MetricSet metrics(const ConfusionMatrix& cm, double mse = 0.0);

struct RocPoint {
  double threshold;
  double fpr;
  double tpr;
};

// Lower output means "more positive". Each point predicts positive for
// outputs <= threshold; the first point is (0, 0) at threshold -inf and the
// last is (1, 1) at the largest output.
struct RocCurve {
  std::vector<RocPoint> points;
  double auc = 0.0;  // trapezoidal
};

// Throws ContractError unless both classes are present.
RocCurve roc(std::span<const int> truth, std::span<const double> outputs);

void write_roc_csv(std::ostream& out, const RocCurve& curve);

// Network evaluated on one partition of a dataset.
struct PartitionResult {
  std::string partition;  // "Training" or "Testing"
  ConfusionMatrix cm;
  MetricSet metrics;
  std::vector<double> outputs;
  std::optional<RocCurve> roc;
  std::string roc_note;   // why roc is absent
};

PartitionResult evaluate_partition(const std::string& partition, const NetworkTopology& topology,
                                   std::span<const double> params, const Dataset& data);

struct ModelReport {
  std::string model;
  std::string dataset;
  std::string schema_fingerprint;
  std::size_t samples = 0;
  std::size_t dimension = 0;
  std::vector<PartitionResult> partitions;
};

// Human-readable tables: per-class counts, MSE and correct rate, then the
// confusion-matrix metrics and AUC.
void write_report(std::ostream& out, const ModelReport& report);

// One row per partition with every count and metric at full precision.
void write_metrics_csv(std::ostream& out, const ModelReport& report);

}  // namespace swarmnet
