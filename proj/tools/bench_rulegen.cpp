// Benchmarks the OpenMP rule-generation kernel against the serial reference
// on a synthetic dataset and checks that both produce the same rule base.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "frbcs/rule_engine.hpp"

namespace {

frbcs::Dataset synthetic(std::size_t m, std::size_t n, int classes, std::uint64_t seed) {
  frbcs::Dataset ds;
  ds.name = "bench";
  std::mt19937_64 rng(seed);
  auto unit = [&] { return static_cast<double>(rng()) / static_cast<double>(rng.max()); };
  for (std::size_t p = 0; p < m; ++p) {
    std::vector<double> row(n);
    for (auto& v : row) v = unit();
    ds.patterns.push_back(std::move(row));
    ds.labels.push_back(static_cast<int>(rng() % classes));
  }
  for (int c = 0; c < classes; ++c) ds.class_names.push_back("c" + std::to_string(c));
  for (std::size_t a = 0; a < n; ++a) ds.attribute_names.push_back("a" + std::to_string(a));
  return ds;
}

bool same_rules(const frbcs::RuleSet& a, const frbcs::RuleSet& b) {
  if (a.rules.size() != b.rules.size()) return false;
  for (std::size_t i = 0; i < a.rules.size(); ++i) {
    const auto& ra = a.rules[i];
    const auto& rb = b.rules[i];
    if (ra.first.attribute != rb.first.attribute ||
        !(ra.first.fuzzy_set == rb.first.fuzzy_set) ||
        ra.second.attribute != rb.second.attribute ||
        !(ra.second.fuzzy_set == rb.second.fuzzy_set) ||
        ra.consequent != rb.consequent || ra.confidence != rb.confidence ||
        ra.support != rb.support || ra.weight != rb.weight) {
      return false;
    }
  }
  return true;
}

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not enabled\n");
#endif

  auto ds = synthetic(800, 12, 3, 7);
  auto t = frbcs::validate(frbcs::TNormKind::AczelAlsina, 2.0);

  frbcs::RuleSet serial, parallel;
  double ms_serial = time_ms([&] { serial = frbcs::generate_serial(ds, t); });
  double ms_parallel = time_ms([&] { parallel = frbcs::generate(ds, t); });

  std::printf("rules: %zu\n", serial.rules.size());
  std::printf("serial:   %8.2f ms\n", ms_serial);
  std::printf("parallel: %8.2f ms  (speedup %.2fx)\n", ms_parallel,
              ms_serial / ms_parallel);

  if (!same_rules(serial, parallel)) {
    std::printf("MISMATCH: parallel rule base differs from serial reference\n");
    return 1;
  }
  std::printf("rule bases identical\n");
  return 0;
}
