#include "frbcs/report.hpp"

#include <cstdio>
#include <sstream>

namespace frbcs {

namespace {

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::string accuracy_csv(const AccuracyMatrix& matrix) {
  std::ostringstream out;
  out << "dataset";
  for (const auto& name : matrix.tnorm_names) out << "," << name;
  out << "\n";
  for (std::size_t i = 0; i < matrix.dataset_names.size(); ++i) {
    out << matrix.dataset_names[i];
    for (double v : matrix.accuracies[i]) out << "," << fixed2(v);
    out << "\n";
  }
  return out.str();
}

std::string accuracy_markdown(const AccuracyMatrix& matrix) {
  std::ostringstream out;
  out << "| Dataset |";
  for (const auto& name : matrix.tnorm_names) out << " " << name << " |";
  out << "\n|---|";
  for (std::size_t j = 0; j < matrix.tnorm_names.size(); ++j) out << "---|";
  out << "\n";
  for (std::size_t i = 0; i < matrix.dataset_names.size(); ++i) {
    out << "| " << matrix.dataset_names[i] << " |";
    for (double v : matrix.accuracies[i]) out << " " << fixed2(v) << " |";
    out << "\n";
  }
  return out.str();
}

std::string rank_markdown(const FriedmanResult& result,
                          const std::vector<std::string>& algorithm_names) {
  std::ostringstream out;
  out << "| Algorithm | Average rank |\n|---|---|\n";
  for (std::size_t j = 0; j < algorithm_names.size(); ++j) {
    out << "| " << algorithm_names[j] << " | " << fixed4(result.average_ranks[j])
        << " |\n";
  }
  return out.str();
}

std::string friedman_summary(const FriedmanResult& result) {
  std::ostringstream out;
  char stat[32], p[32];
  std::snprintf(stat, sizeof(stat), "%.6f", result.statistic);
  std::snprintf(p, sizeof(p), "%.8g", result.p_value);
  out << "Friedman statistic (distributed according to chi-square with "
      << result.degrees_of_freedom << " degrees of freedom): " << stat
      << "; p-value: " << p << "\n";
  return out.str();
}

}  // namespace frbcs
