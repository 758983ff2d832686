#include "swarmnet/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "format.hpp"
#include "swarmnet/error.hpp"
#include "swarmnet/random.hpp"

namespace swarmnet {

namespace {

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const auto comma = value.find(',', start);
    const auto end = comma == std::string_view::npos ? value.size() : comma;
    const auto item = trim(value.substr(start, end - start));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void add_tokens(std::set<std::string>& into, std::string_view value) {
  for (const auto& token : split_list(value)) into.insert(to_lower(token));
}

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += '|';
    out += s;
  }
  return out;
}

}  // namespace

DatasetSchema DatasetSchema::parse(std::istream& in) {
  DatasetSchema schema;
  bool has_target_pos = false;
  bool has_target_neg = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw SchemaError("schema line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = to_lower(trim(text.substr(0, eq)));
    const auto value = trim(text.substr(eq + 1));
    if (key == "name") {
      schema.name = std::string(value);
    } else if (key == "target") {
      schema.target_column = std::string(value);
    } else if (key == "features" || key == "feature") {
      for (auto& col : split_list(value)) schema.feature_columns.push_back(std::move(col));
    } else if (key == "numeric") {
      for (auto& col : split_list(value)) schema.numeric_columns.insert(std::move(col));
    } else if (key == "positive_tokens") {
      add_tokens(schema.positive_tokens, value);
    } else if (key == "negative_tokens") {
      add_tokens(schema.negative_tokens, value);
    } else if (key == "target_positive_tokens") {
      add_tokens(schema.target_positive_tokens, value);
      has_target_pos = true;
    } else if (key == "target_negative_tokens") {
      add_tokens(schema.target_negative_tokens, value);
      has_target_neg = true;
    } else {
      throw SchemaError("schema line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!has_target_pos) schema.target_positive_tokens = schema.positive_tokens;
  if (!has_target_neg) schema.target_negative_tokens = schema.negative_tokens;
  schema.validate();
  return schema;
}

DatasetSchema DatasetSchema::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open schema file '" + path + "'");
  return parse(in);
}

void DatasetSchema::validate() const {
  if (feature_columns.empty()) throw SchemaError("schema lists no feature columns");
  if (target_column.empty()) throw SchemaError("schema has no target column");
  std::set<std::string> seen;
  for (const auto& col : feature_columns) {
    if (col == target_column) throw SchemaError("column '" + col + "' is both a feature and the target");
    if (!seen.insert(col).second) throw SchemaError("feature column '" + col + "' is listed twice");
  }
  for (const auto& col : numeric_columns) {
    if (!seen.contains(col)) throw SchemaError("numeric column '" + col + "' is not a feature column");
  }
  const auto disjoint = [](const std::set<std::string>& a, const std::set<std::string>& b, const char* what) {
    for (const auto& token : a) {
      if (b.contains(token)) throw SchemaError(std::string("token '") + token + "' is in both " + what + " sets");
    }
  };
  disjoint(positive_tokens, negative_tokens, "positive and negative");
  disjoint(target_positive_tokens, target_negative_tokens, "target positive and target negative");
  if (numeric_columns.size() < feature_columns.size() && (positive_tokens.empty() || negative_tokens.empty())) {
    throw SchemaError("schema needs positive_tokens and negative_tokens for its binary feature columns");
  }
  if (target_positive_tokens.empty() || target_negative_tokens.empty()) {
    throw SchemaError("schema needs positive and negative tokens for the target column");
  }
}

std::string DatasetSchema::fingerprint() const {
  std::ostringstream canon;
  canon << "target=" << target_column << '\n';
  canon << "features=";
  for (const auto& col : feature_columns) canon << col << (numeric_columns.contains(col) ? ":n" : ":b") << '|';
  canon << "\npositive=" << join(positive_tokens) << "\nnegative=" << join(negative_tokens)
        << "\ntarget_positive=" << join(target_positive_tokens)
        << "\ntarget_negative=" << join(target_negative_tokens) << '\n';

  // FNV-1a, 64 bit.
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canon.str()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  Dataset out;
  out.feature_names = feature_names;
  out.features = Matrix(indices.size(), features.cols);
  out.targets.reserve(indices.size());
  out.row_provenance.reserve(indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const std::size_t i = indices[k];
    if (i >= size()) throw ContractError("subset index out of range");
    std::copy_n(features.row(i).begin(), features.cols, out.features.row(k).begin());
    out.targets.push_back(targets[i]);
    out.row_provenance.push_back(row_provenance[i]);
  }
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

Dataset parse_csv(std::istream& in, const DatasetSchema& schema) {
  schema.validate();
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("CSV input is empty (no header row)");
  if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::map<std::string, std::size_t> header_index;
  {
    const auto header = split_csv_line(line);
    for (std::size_t i = 0; i < header.size(); ++i) header_index.emplace(std::string(trim(header[i])), i);
  }
  const auto column = [&](const std::string& name) {
    auto it = header_index.find(name);
    if (it == header_index.end()) throw SchemaError("CSV header has no column '" + name + "'");
    return it->second;
  };

  struct FeatureColumn {
    std::size_t index;
    bool numeric;
  };
  std::vector<FeatureColumn> feature_cols;
  for (const auto& name : schema.feature_columns) {
    feature_cols.push_back({column(name), schema.numeric_columns.contains(name)});
  }
  const std::size_t target_col = column(schema.target_column);

  Dataset ds;
  ds.feature_names = schema.feature_columns;
  const std::size_t width = feature_cols.size();
  ds.features.cols = width;

  std::set<std::vector<double>> seen;
  std::vector<double> encoded(width + 1);
  std::size_t data_row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const std::size_t row = data_row++;
    ++ds.stats.rows_read;
    const auto fields = split_csv_line(line);

    enum class Verdict { keep, missing, invalid } verdict = Verdict::keep;
    const auto cell = [&](std::size_t idx) -> std::string_view {
      return idx < fields.size() ? trim(fields[idx]) : std::string_view{};
    };

    for (std::size_t k = 0; k < width && verdict == Verdict::keep; ++k) {
      const auto text = cell(feature_cols[k].index);
      if (text.empty()) {
        verdict = Verdict::missing;
      } else if (feature_cols[k].numeric) {
        auto value = parse_real(text);
        if (!value || !std::isfinite(*value)) verdict = Verdict::invalid;
        else encoded[k] = *value;
      } else {
        const auto token = to_lower(text);
        if (schema.positive_tokens.contains(token)) encoded[k] = 0.0;
        else if (schema.negative_tokens.contains(token)) encoded[k] = 1.0;
        else verdict = Verdict::invalid;
      }
    }
    if (verdict == Verdict::keep) {
      const auto text = cell(target_col);
      if (text.empty()) {
        verdict = Verdict::missing;
      } else {
        const auto token = to_lower(text);
        if (schema.target_positive_tokens.contains(token)) encoded[width] = 1.0;
        else if (schema.target_negative_tokens.contains(token)) encoded[width] = 2.0;
        else verdict = Verdict::invalid;
      }
    }

    if (verdict == Verdict::missing) {
      ++ds.stats.dropped_missing;
      continue;
    }
    if (verdict == Verdict::invalid) {
      ++ds.stats.dropped_invalid;
      continue;
    }
    if (!seen.insert(encoded).second) {
      ++ds.stats.dropped_duplicate;
      continue;
    }
    ds.features.data.insert(ds.features.data.end(), encoded.begin(), encoded.begin() + static_cast<std::ptrdiff_t>(width));
    ds.targets.push_back(encoded[width]);
    ds.row_provenance.push_back(row);
  }
  if (in.bad()) throw IoError("read error while parsing CSV");
  ds.features.rows = ds.targets.size();
  return ds;
}

Dataset load_csv(const std::string& path, const DatasetSchema& schema) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset '" + path + "'");
  return parse_csv(in, schema);
}

void write_encoded_csv(std::ostream& out, const Dataset& dataset) {
  out << "source_row";
  for (const auto& name : dataset.feature_names) {
    const bool needs_quotes = name.find_first_of(",\"") != std::string::npos;
    out << ',';
    if (needs_quotes) {
      out << '"';
      for (char c : name) out << (c == '"' ? "\"\"" : std::string(1, c));
      out << '"';
    } else {
      out << name;
    }
  }
  out << ",target\n";
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    out << dataset.row_provenance[i];
    for (double v : dataset.features.row(i)) out << ',' << format_real(v);
    out << ',' << format_real(dataset.targets[i]) << '\n';
  }
}

std::size_t train_size(std::size_t n) {
  return (4 * n + 4) / 5;
}

Split split_80_20(std::size_t n, std::uint64_t seed) {
  if (n < 5) throw ConfigError("an 80:20 split needs at least 5 samples (got " + std::to_string(n) + ")");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(order[i], order[j]);
  }
  const auto cut = static_cast<std::ptrdiff_t>(train_size(n));
  return Split{{order.begin(), order.begin() + cut}, {order.begin() + cut, order.end()}};
}

}  // namespace swarmnet
