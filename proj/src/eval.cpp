#include "frbcs/eval.hpp"

#include <numeric>
#include <random>
#include <tuple>

namespace frbcs {

namespace {

Dataset select_rows(const Dataset& ds, const std::vector<int>& assignments, int fold,
                    bool keep_fold) {
  Dataset out;
  out.name = ds.name;
  out.class_names = ds.class_names;
  out.attribute_names = ds.attribute_names;
  for (std::size_t p = 0; p < ds.size(); ++p) {
    if ((assignments[p] == fold) == keep_fold) {
      out.patterns.push_back(ds.patterns[p]);
      out.labels.push_back(ds.labels[p]);
    }
  }
  return out;
}

}  // namespace

FoldPlan make_folds(std::size_t m, std::uint64_t seed) {
  if (m < kFoldCount) {
    throw TooFewPatterns("need at least " + std::to_string(kFoldCount) +
                         " patterns, got " + std::to_string(m));
  }
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  // Fisher-Yates with mt19937_64 output taken modulo the range, so the plan
  // is identical across standard library implementations.
  std::mt19937_64 rng(seed);
  for (std::size_t i = m - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(perm[i], perm[j]);
  }
  FoldPlan plan{seed, std::vector<int>(m)};
  for (std::size_t pos = 0; pos < m; ++pos) {
    plan.fold_assignments[perm[pos]] = static_cast<int>(pos % kFoldCount);
  }
  return plan;
}

double cross_validate(const Dataset& ds, const TNorm& t, int repeats,
                      std::uint64_t seed, const EvalOptions& options,
                      CellStats* stats) {
  double acc_sum = 0.0;
  double rule_count_sum = 0.0;
  std::size_t rejected = 0, tested = 0;

  for (int r = 0; r < repeats; ++r) {
    FoldPlan plan = make_folds(ds.size(), seed + static_cast<std::uint64_t>(r));
    for (int f = 0; f < kFoldCount; ++f) {
      Dataset train = select_rows(ds, plan.fold_assignments, f, false);
      Dataset test = select_rows(ds, plan.fold_assignments, f, true);
      if (options.global_normalization) {
        auto model = NormalizationModel::fit(ds);
        train = model.transform(train);
        test = model.transform(test);
      } else {
        std::tie(train, test) = normalize(train, test);
      }
      RuleSet rs = generate(train, t, options.scheme);
      rule_count_sum += static_cast<double>(rs.rules.size());

      std::size_t correct = 0;
      for (std::size_t p = 0; p < test.size(); ++p) {
        auto predicted = classify(rs, test.patterns[p], t);
        if (!predicted) {
          ++rejected;
        } else if (*predicted == test.labels[p]) {
          ++correct;
        }
      }
      tested += test.size();
      acc_sum += test.size() == 0
                     ? 0.0
                     : 100.0 * static_cast<double>(correct) / static_cast<double>(test.size());
    }
  }

  int folds_total = repeats * kFoldCount;
  if (stats) {
    stats->mean_rule_count = rule_count_sum / folds_total;
    stats->rejection_rate =
        tested == 0 ? 0.0 : static_cast<double>(rejected) / static_cast<double>(tested);
  }
  return acc_sum / folds_total;
}

AccuracyMatrix run_matrix(const std::vector<Dataset>& datasets,
                          const std::vector<TNorm>& tnorms, int repeats,
                          std::uint64_t seed, const EvalOptions& options,
                          std::vector<std::vector<CellStats>>* stats) {
  if (datasets.empty() || tnorms.empty()) {
    throw EmptyInput("run_matrix: need at least one dataset and one T-norm");
  }
  AccuracyMatrix matrix;
  for (const auto& ds : datasets) matrix.dataset_names.push_back(ds.name);
  for (const auto& t : tnorms) matrix.tnorm_names.push_back(kind_name(t.kind));
  if (stats) stats->assign(datasets.size(), std::vector<CellStats>(tnorms.size()));

  for (std::size_t i = 0; i < datasets.size(); ++i) {
    std::vector<double> row;
    for (std::size_t j = 0; j < tnorms.size(); ++j) {
      try {
        CellStats cell;
        row.push_back(cross_validate(datasets[i], tnorms[j], repeats, seed, options,
                                     stats ? &cell : nullptr));
        if (stats) (*stats)[i][j] = cell;
      } catch (const std::exception& e) {
        throw std::runtime_error("cell [" + datasets[i].name + " x " +
                                 kind_name(tnorms[j].kind) + "]: " + e.what());
      }
    }
    matrix.accuracies.push_back(std::move(row));
  }
  return matrix;
}

}  // namespace frbcs
