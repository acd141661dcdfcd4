#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frbcs/dataset.hpp"
#include "frbcs/rule_engine.hpp"
#include "frbcs/tnorm.hpp"

namespace frbcs {

inline constexpr int kFoldCount = 10;

/// Deterministic assignment of the m patterns to 10 folds.
struct FoldPlan {
  std::uint64_t seed;
  std::vector<int> fold_assignments;  // m entries in 0..9
};

/// Seeded random permutation of 0..m-1 dealt round-robin into 10 folds.
/// Fold sizes differ by at most 1. Throws TooFewPatterns when m < 10.
FoldPlan make_folds(std::size_t m, std::uint64_t seed);

struct EvalOptions {
  WeightScheme scheme = WeightScheme::CertaintyFactor;
  bool global_normalization = false;  // fit min-max on all data instead of per fold
};

/// Per-cell diagnostics accumulated over all repeats x folds.
struct CellStats {
  double mean_rule_count = 0.0;
  double rejection_rate = 0.0;  // fraction of test patterns rejected
};

/// Mean test accuracy (percent) over repeats x 10 folds. Repeat r uses
/// seed + r. Rejected patterns count as misclassified.
double cross_validate(const Dataset& ds, const TNorm& t, int repeats,
                      std::uint64_t seed, const EvalOptions& options = {},
                      CellStats* stats = nullptr);

struct AccuracyMatrix {
  std::vector<std::string> dataset_names;
  std::vector<std::string> tnorm_names;
  std::vector<std::vector<double>> accuracies;  // datasets x tnorms, percent
};

/// Runs cross_validate for every dataset x T-norm cell, preserving input
/// order. Per-cell errors are rethrown annotated with the cell's names.
AccuracyMatrix run_matrix(const std::vector<Dataset>& datasets,
                          const std::vector<TNorm>& tnorms, int repeats,
                          std::uint64_t seed, const EvalOptions& options = {},
                          std::vector<std::vector<CellStats>>* stats = nullptr);

}  // namespace frbcs
