#include "swarmnet/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>

#include "format.hpp"
#include "swarmnet/error.hpp"

namespace swarmnet {

ConfusionMatrix confusion(std::span<const int> truth, std::span<const int> predicted) {
  if (truth.size() != predicted.size()) throw ContractError("label vectors differ in length");
  if (truth.empty()) throw ContractError("confusion matrix needs at least one sample");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const int t = truth[i];
    const int p = predicted[i];
    if ((t != 1 && t != 2) || (p != 1 && p != 2)) throw ContractError("labels must be 1 or 2");
    if (t == 1) (p == 1 ? cm.tp : cm.fn)++;
    else (p == 2 ? cm.tn : cm.fp)++;
  }
  return cm;
}

namespace {

double ratio(std::uint64_t num, std::uint64_t den, unsigned flag, unsigned& degenerate) {
  if (den == 0) {
    degenerate |= flag;
    return 1.0;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

MetricSet metrics(const ConfusionMatrix& cm, double mse) {
  if (cm.total() == 0) throw ContractError("metrics need a non-empty confusion matrix");
  MetricSet m;
  m.sensitivity = ratio(cm.tp, cm.tp + cm.fn, kDegenerateSensitivity, m.degenerate);
  m.specificity = ratio(cm.tn, cm.tn + cm.fp, kDegenerateSpecificity, m.degenerate);
  m.ppv = ratio(cm.tp, cm.tp + cm.fp, kDegeneratePpv, m.degenerate);
  m.npv = ratio(cm.tn, cm.tn + cm.fn, kDegenerateNpv, m.degenerate);
  m.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
  m.correct_rate_percent = 100.0 * m.accuracy;
  m.mse = mse;
  return m;
}

RocCurve roc(std::span<const int> truth, std::span<const double> outputs) {
  if (truth.size() != outputs.size()) throw ContractError("labels and outputs differ in length");
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
  for (int t : truth) {
    if (t == 1) ++pos;
    else if (t == 2) ++neg;
    else throw ContractError("labels must be 1 or 2");
  }
  if (pos == 0) throw ContractError("ROC curve is degenerate: no positive (label 1) samples");
  if (neg == 0) throw ContractError("ROC curve is degenerate: no negative (label 2) samples");

  std::vector<std::size_t> order(outputs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return outputs[a] < outputs[b]; });

  RocCurve curve;
  curve.points.push_back({-std::numeric_limits<double>::infinity(), 0.0, 0.0});
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  for (std::size_t k = 0; k < order.size();) {
    const double threshold = outputs[order[k]];
    while (k < order.size() && outputs[order[k]] == threshold) {
      (truth[order[k]] == 1 ? tp : fp)++;
      ++k;
    }
    curve.points.push_back(
        {threshold, static_cast<double>(fp) / static_cast<double>(neg), static_cast<double>(tp) / static_cast<double>(pos)});
  }
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    const auto& a = curve.points[i - 1];
    const auto& b = curve.points[i];
    curve.auc += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0;
  }
  return curve;
}

void write_roc_csv(std::ostream& out, const RocCurve& curve) {
  out << "threshold,fpr,tpr\n";
  for (const auto& p : curve.points) {
    out << format_real(p.threshold) << ',' << format_real(p.fpr) << ',' << format_real(p.tpr) << '\n';
  }
}

PartitionResult evaluate_partition(const std::string& partition, const NetworkTopology& topology,
                                   std::span<const double> params, const Dataset& data) {
  if (data.size() == 0) throw ConfigError(partition + " partition is empty");
  PartitionResult result;
  result.partition = partition;
  result.outputs = forward_batch(topology, params, data.features);

  std::vector<int> truth(data.size());
  std::vector<int> predicted(data.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    truth[i] = static_cast<int>(data.targets[i]);
    predicted[i] = classify(result.outputs[i]);
    const double residual = data.targets[i] - result.outputs[i];
    sum += residual * residual;
  }
  result.cm = confusion(truth, predicted);
  result.metrics = metrics(result.cm, sum / static_cast<double>(data.size()));
  try {
    result.roc = roc(truth, result.outputs);
  } catch (const ContractError& e) {
    result.roc_note = e.what();
  }
  return result;
}

namespace {

std::string class_rate(std::uint64_t correct, std::uint64_t cases) {
  if (cases == 0) return "n/a";
  return format_fixed(100.0 * static_cast<double>(correct) / static_cast<double>(cases), 4);
}

std::string mse_text(double mse) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7g", mse);
  return buf;
}

}  // namespace

void write_report(std::ostream& out, const ModelReport& report) {
  out << "Model:       " << report.model << '\n';
  out << "Dataset:     " << report.dataset << " (schema " << report.schema_fingerprint << ")\n";
  out << "Samples:     " << report.samples << '\n';
  out << "Dimension:   " << report.dimension << "\n\n";

  out << "Classification performance\n";
  out << std::left << std::setw(10) << "Partition" << std::right << std::setw(10) << "Pos.cases" << std::setw(12)
      << "Pos.correct" << std::setw(11) << "Pos.acc%" << std::setw(10) << "Neg.cases" << std::setw(12) << "Neg.correct"
      << std::setw(11) << "Neg.acc%" << std::setw(14) << "MSE" << std::setw(10) << "Rate%" << '\n';
  for (const auto& p : report.partitions) {
    out << std::left << std::setw(10) << p.partition << std::right << std::setw(10) << p.cm.positives()
        << std::setw(12) << p.cm.tp << std::setw(11) << class_rate(p.cm.tp, p.cm.positives()) << std::setw(10)
        << p.cm.negatives() << std::setw(12) << p.cm.tn << std::setw(11) << class_rate(p.cm.tn, p.cm.negatives())
        << std::setw(14) << mse_text(p.metrics.mse) << std::setw(10) << format_fixed(p.metrics.correct_rate_percent, 4)
        << '\n';
  }

  out << "\nConfusion-matrix evaluation\n";
  out << std::left << std::setw(10) << "Partition" << std::right << std::setw(13) << "Sensitivity" << std::setw(13)
      << "Specificity" << std::setw(8) << "PPV" << std::setw(8) << "NPV" << std::setw(11) << "Accuracy" << std::setw(9)
      << "AUC" << '\n';
  for (const auto& p : report.partitions) {
    const auto& m = p.metrics;
    out << std::left << std::setw(10) << p.partition << std::right << std::setw(13) << format_fixed(m.sensitivity, 2)
        << std::setw(13) << format_fixed(m.specificity, 2) << std::setw(8) << format_fixed(m.ppv, 2) << std::setw(8)
        << format_fixed(m.npv, 2) << std::setw(11) << (format_fixed(m.correct_rate_percent, 2) + "%") << std::setw(9)
        << (p.roc ? format_fixed(p.roc->auc, 4) : std::string("n/a")) << '\n';
  }

  bool noted = false;
  for (const auto& p : report.partitions) {
    const auto note = [&](const std::string& text) {
      if (!noted) out << '\n';
      noted = true;
      out << "note: " << p.partition << ": " << text << '\n';
    };
    const unsigned d = p.metrics.degenerate;
    if (d & kDegenerateSensitivity) note("sensitivity has no positive cases; reported as 1");
    if (d & kDegenerateSpecificity) note("specificity has no negative cases; reported as 1");
    if (d & kDegeneratePpv) note("PPV has no positive predictions; reported as 1");
    if (d & kDegenerateNpv) note("NPV has no negative predictions; reported as 1");
    if (!p.roc) note(p.roc_note);
  }
}

void write_metrics_csv(std::ostream& out, const ModelReport& report) {
  out << "model,partition,positive_cases,positive_correct,negative_cases,negative_correct,tp,fn,tn,fp,"
         "mse,rate_percent,sensitivity,specificity,ppv,npv,accuracy,auc,degenerate_flags\n";
  for (const auto& p : report.partitions) {
    const auto& m = p.metrics;
    out << report.model << ',' << p.partition << ',' << p.cm.positives() << ',' << p.cm.tp << ','
        << p.cm.negatives() << ',' << p.cm.tn << ',' << p.cm.tp << ',' << p.cm.fn << ',' << p.cm.tn << ','
        << p.cm.fp << ',' << format_real(m.mse) << ',' << format_real(m.correct_rate_percent) << ','
        << format_real(m.sensitivity) << ',' << format_real(m.specificity) << ',' << format_real(m.ppv) << ','
        << format_real(m.npv) << ',' << format_real(m.accuracy) << ',' << (p.roc ? format_real(p.roc->auc) : "") << ','
        << m.degenerate << '\n';
  }
}

}  // namespace swarmnet
