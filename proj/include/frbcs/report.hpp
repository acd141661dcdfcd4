#pragma once

#include <string>

#include "frbcs/eval.hpp"
#include "frbcs/stats.hpp"

namespace frbcs {

/// Accuracy matrix as CSV: datasets as rows, T-norms as columns,
/// percentages with two decimals.
std::string accuracy_csv(const AccuracyMatrix& matrix);

/// Accuracy matrix as a Markdown table.
std::string accuracy_markdown(const AccuracyMatrix& matrix);

/// Algorithm / average-rank table in Markdown.
std::string rank_markdown(const FriedmanResult& result,
                          const std::vector<std::string>& algorithm_names);

/// One-paragraph summary naming the statistic, degrees of freedom and p-value.
std::string friedman_summary(const FriedmanResult& result);

}  // namespace frbcs
