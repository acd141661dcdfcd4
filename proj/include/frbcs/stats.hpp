#pragma once

#include <string>
#include <vector>

#include "frbcs/errors.hpp"
#include "frbcs/eval.hpp"

namespace frbcs {

/// Per-dataset ranks of k algorithms; each row sums to k(k+1)/2.
struct RankMatrix {
  std::vector<std::vector<double>> ranks;  // N x k
  std::vector<std::string> algorithm_names;
};

struct FriedmanResult {
  std::vector<double> average_ranks;  // k column means
  double statistic;
  int degrees_of_freedom;  // k - 1
  double p_value;
};

/// Ranks each row of the accuracy matrix: the highest accuracy gets rank 1,
/// ties share the mean of the ranks they span. The optional epsilon widens
/// tie detection; the default is exact equality.
RankMatrix rank_rows(const AccuracyMatrix& matrix, double tie_epsilon = 0.0);

/// Friedman statistic over the rank matrix, with upper-tail chi-square
/// p-value at k-1 degrees of freedom. Requires N >= 2 and k >= 2.
FriedmanResult friedman(const RankMatrix& rm);

/// Upper-tail chi-square probability P(X > x) at df degrees of freedom,
/// via the regularized incomplete gamma function. Absolute accuracy is
/// better than 1e-10 for x <= 200, df <= 50.
double chi_square_upper_tail(double x, int df);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double regularized_gamma_q(double a, double x);

}  // namespace frbcs
