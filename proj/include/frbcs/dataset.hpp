#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "frbcs/errors.hpp"

namespace frbcs {

/// A numeric pattern matrix with dense integer class labels.
struct Dataset {
  std::string name;
  std::vector<std::vector<double>> patterns;  // m rows of n attributes
  std::vector<int> labels;                    // m labels in 0..C-1
  std::vector<std::string> class_names;       // C entries
  std::vector<std::string> attribute_names;   // n entries
  std::size_t dropped_rows = 0;               // rows removed for missing values

  std::size_t size() const { return patterns.size(); }
  std::size_t dimensionality() const {
    return patterns.empty() ? attribute_names.size() : patterns[0].size();
  }
  int class_count() const { return static_cast<int>(class_names.size()); }
};

struct LoadOptions {
  bool has_header = false;
  int label_column = -1;  // -1 means last column
};

/// Parses a comma-separated numeric file with one label column. Rows with
/// missing values ("?" or empty field) are dropped and counted. Labels are
/// mapped to dense integers in first-appearance order.
Dataset load_csv(const std::string& path, const LoadOptions& options = {});

/// Per-attribute linear min-max transform fitted on training data.
struct NormalizationModel {
  std::vector<double> mins;
  std::vector<double> maxs;

  static NormalizationModel fit(const Dataset& train);
  /// Applies the transform; values are clamped into [0,1] and constant
  /// attributes (min == max) map to 0.5.
  Dataset transform(const Dataset& ds) const;
};

/// Fits on train and applies to both.
std::pair<Dataset, Dataset> normalize(const Dataset& train, const Dataset& test);

}  // namespace frbcs
