#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "swarmnet/network.hpp"

namespace swarmnet {

// Column selection and token encoding for one CSV dataset.
//
// Schema files are `key = value` lines; `#` starts a comment.
//   name                    free-form label used in reports
//   target                  target column
//   features                comma-separated feature columns (may repeat; appends)
//   numeric                 comma-separated features passed through as numbers
//   positive_tokens         tokens encoded 0 in feature columns (e.g. yes)
//   negative_tokens         tokens encoded 1 in feature columns (e.g. no)
//   target_positive_tokens  tokens encoded 1 in the target (default: positive_tokens)
//   target_negative_tokens  tokens encoded 2 in the target (default: negative_tokens)
// Tokens match case-insensitively after trimming whitespace.
struct DatasetSchema {
  std::string name;
  std::vector<std::string> feature_columns;
  std::string target_column;
  std::set<std::string> positive_tokens;
  std::set<std::string> negative_tokens;
  std::set<std::string> target_positive_tokens;
  std::set<std::string> target_negative_tokens;
  std::set<std::string> numeric_columns;

  static DatasetSchema parse(std::istream& in);
  static DatasetSchema load(const std::string& path);

  void validate() const;

  // 16 hex digits identifying the column selection and encoding. The name
  // does not contribute.
  std::string fingerprint() const;
};

struct LoadStats {
  std::size_t rows_read = 0;
  std::size_t dropped_missing = 0;    // empty cell or short row
  std::size_t dropped_invalid = 0;    // unknown token or unparseable number
  std::size_t dropped_duplicate = 0;  // same encoded features and target as an earlier row

  std::size_t dropped() const { return dropped_missing + dropped_invalid + dropped_duplicate; }
  friend bool operator==(const LoadStats&, const LoadStats&) = default;
};

struct Dataset {
  std::vector<std::string> feature_names;
  Matrix features;
  std::vector<double> targets;             // 1 = positive, 2 = negative
  std::vector<std::size_t> row_provenance; // zero-based data row in the source file
  LoadStats stats;

  std::size_t size() const { return targets.size(); }

  // Rows at the given indices, in that order.
  Dataset subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// Splits one CSV line into fields. Double-quoted fields may contain commas
// and "" escapes.
std::vector<std::string> split_csv_line(std::string_view line);

Dataset parse_csv(std::istream& in, const DatasetSchema& schema);
Dataset load_csv(const std::string& path, const DatasetSchema& schema);

// Encoded matrix and target as CSV, with a leading source_row column.
void write_encoded_csv(std::ostream& out, const Dataset& dataset);

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

// ceil(0.8 * n).
std::size_t train_size(std::size_t n);

// Seeded Fisher-Yates shuffle of 0..n-1; the first train_size(n) indices
// train, the rest test. n must be at least 5.
Split split_80_20(std::size_t n, std::uint64_t seed);

}  // namespace swarmnet
