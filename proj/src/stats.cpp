#include "frbcs/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace frbcs {

namespace {

// Lower regularized incomplete gamma P(a, x) by series expansion;
// converges quickly for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double term = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized incomplete gamma Q(a, x) by Lentz continued fraction;
// converges quickly for x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw DomainError("regularized_gamma_q: invalid arguments");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_upper_tail(double x, int df) {
  if (x < 0.0) throw DomainError("chi_square_upper_tail: x must be >= 0");
  if (df < 1) throw DomainError("chi_square_upper_tail: df must be >= 1");
  return regularized_gamma_q(0.5 * df, 0.5 * x);
}

RankMatrix rank_rows(const AccuracyMatrix& matrix, double tie_epsilon) {
  RankMatrix rm;
  rm.algorithm_names = matrix.tnorm_names;
  std::size_t k = matrix.tnorm_names.size();
  for (const auto& row : matrix.accuracies) {
    for (double v : row) {
      if (!std::isfinite(v)) throw NonFiniteInput("rank_rows: non-finite accuracy");
    }
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    // Higher accuracy gets the smaller rank.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return row[a] > row[b]; });

    std::vector<double> ranks(k);
    std::size_t i = 0;
    while (i < k) {
      std::size_t j = i;
      while (j + 1 < k && row[order[i]] - row[order[j + 1]] <= tie_epsilon) ++j;
      double shared = 0.5 * static_cast<double>(i + j) + 1.0;  // mean of ranks i+1..j+1
      for (std::size_t q = i; q <= j; ++q) ranks[order[q]] = shared;
      i = j + 1;
    }
    rm.ranks.push_back(std::move(ranks));
  }
  return rm;
}

FriedmanResult friedman(const RankMatrix& rm) {
  std::size_t big_n = rm.ranks.size();
  std::size_t k = rm.algorithm_names.size();
  if (big_n < 2 || k < 2) {
    throw DegenerateInput("friedman: need at least 2 datasets and 2 algorithms");
  }

  FriedmanResult result;
  result.average_ranks.assign(k, 0.0);
  for (const auto& row : rm.ranks) {
    for (std::size_t j = 0; j < k; ++j) result.average_ranks[j] += row[j];
  }
  for (auto& r : result.average_ranks) r /= static_cast<double>(big_n);

  double sum_sq = 0.0;
  for (double r : result.average_ranks) sum_sq += r * r;
  double kd = static_cast<double>(k);
  double nd = static_cast<double>(big_n);
  result.statistic =
      12.0 * nd / (kd * (kd + 1.0)) * (sum_sq - kd * (kd + 1.0) * (kd + 1.0) / 4.0);
  if (result.statistic < 0.0) result.statistic = 0.0;  // rounding guard at full tie
  result.degrees_of_freedom = static_cast<int>(k) - 1;
  result.p_value = chi_square_upper_tail(result.statistic, result.degrees_of_freedom);
  return result;
}

}  // namespace frbcs
