#include "frbcs/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace frbcs {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

bool is_missing(const std::string& f) { return f.empty() || f == "?"; }

}  // namespace

Dataset load_csv(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);

  Dataset ds;
  ds.name = std::filesystem::path(path).stem().string();

  std::unordered_map<std::string, int> class_ids;
  std::string line;
  std::size_t line_no = 0;
  std::size_t n_cols = 0;
  bool header_pending = options.has_header;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (header_pending) {
      header_pending = false;
      n_cols = fields.size();
      std::size_t label_col =
          options.label_column < 0 ? n_cols - 1 : static_cast<std::size_t>(options.label_column);
      for (std::size_t c = 0; c < fields.size(); ++c) {
        if (c != label_col) ds.attribute_names.push_back(fields[c]);
      }
      continue;
    }
    if (n_cols == 0) n_cols = fields.size();
    if (fields.size() != n_cols) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(n_cols) + " fields, got " +
                       std::to_string(fields.size()));
    }
    if (n_cols < 2) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": need at least one attribute and a label column");
    }
    std::size_t label_col =
        options.label_column < 0 ? n_cols - 1 : static_cast<std::size_t>(options.label_column);
    if (label_col >= n_cols) {
      throw ParseError(path + ": label column " + std::to_string(options.label_column) +
                       " out of range for " + std::to_string(n_cols) + " columns");
    }

    if (std::any_of(fields.begin(), fields.end(), is_missing)) {
      ++ds.dropped_rows;
      continue;
    }

    std::vector<double> row;
    row.reserve(n_cols - 1);
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (c == label_col) continue;
      try {
        std::size_t used = 0;
        double v = std::stod(fields[c], &used);
        if (used != fields[c].size() || !std::isfinite(v)) throw std::invalid_argument("");
        row.push_back(v);
      } catch (const std::exception&) {
        throw ParseError(path + ":" + std::to_string(line_no) +
                         ": non-numeric attribute value '" + fields[c] + "'");
      }
    }
    const std::string& label = fields[label_col];
    auto [it, inserted] = class_ids.try_emplace(label, static_cast<int>(class_ids.size()));
    if (inserted) ds.class_names.push_back(label);
    ds.labels.push_back(it->second);
    ds.patterns.push_back(std::move(row));
  }

  if (ds.patterns.empty()) throw EmptyDataset("no usable rows in " + path);
  if (ds.attribute_names.empty()) {
    for (std::size_t i = 0; i < ds.patterns[0].size(); ++i) {
      ds.attribute_names.push_back("attr" + std::to_string(i));
    }
  }
  return ds;
}

NormalizationModel NormalizationModel::fit(const Dataset& train) {
  if (train.patterns.empty()) throw EmptyDataset("cannot fit normalization on empty data");
  std::size_t n = train.dimensionality();
  NormalizationModel m;
  m.mins.assign(n, std::numeric_limits<double>::infinity());
  m.maxs.assign(n, -std::numeric_limits<double>::infinity());
  for (const auto& row : train.patterns) {
    for (std::size_t j = 0; j < n; ++j) {
      m.mins[j] = std::min(m.mins[j], row[j]);
      m.maxs[j] = std::max(m.maxs[j], row[j]);
    }
  }
  return m;
}

Dataset NormalizationModel::transform(const Dataset& ds) const {
  if (ds.dimensionality() != mins.size()) {
    throw DimensionMismatch("dataset dimensionality does not match fitted model");
  }
  Dataset out = ds;
  for (auto& row : out.patterns) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      double range = maxs[j] - mins[j];
      row[j] = range == 0.0 ? 0.5 : std::clamp((row[j] - mins[j]) / range, 0.0, 1.0);
    }
  }
  return out;
}

std::pair<Dataset, Dataset> normalize(const Dataset& train, const Dataset& test) {
  auto model = NormalizationModel::fit(train);
  return {model.transform(train), model.transform(test)};
}

}  // namespace frbcs
