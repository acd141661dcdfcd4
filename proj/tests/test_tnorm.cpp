#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "frbcs/tnorm.hpp"

using namespace frbcs;

namespace {

std::vector<TNorm> one_per_kind() {
  std::vector<TNorm> out;
  for (int i = 0; i < kTNormKindCount; ++i) {
    auto kind = static_cast<TNormKind>(i);
    out.push_back(validate(kind, default_alpha(kind)));
  }
  return out;
}

// A few alphas inside each family's domain, for property sweeps.
std::vector<double> alpha_grid(TNormKind kind) {
  switch (kind) {
    case TNormKind::Minimum:
    case TNormKind::Product:
      return {0.0};
    case TNormKind::SugenoWeber:
      return {-1.0, -0.5, 0.0, 1.0, 5.0};
    case TNormKind::Hamacher:
      return {0.0, 0.5, 1.0, 2.0, 10.0};
    case TNormKind::DuboisPrade:
      return {0.0, 0.25, 0.5, 0.75, 1.0};
    default:
      return {0.25, 0.5, 1.0, 2.0, 5.0};
  }
}

}  // namespace

TEST_CASE("validate enforces per-family parameter domains") {
  CHECK_NOTHROW(validate(TNormKind::Dombi, 2.0));
  CHECK_THROWS_AS(validate(TNormKind::DuboisPrade, 1.5), ParameterOutOfDomain);
  CHECK_NOTHROW(validate(TNormKind::SugenoWeber, -1.0));  // boundary admitted
  CHECK_THROWS_AS(validate(TNormKind::SugenoWeber, -1.0001), ParameterOutOfDomain);
  CHECK_THROWS_AS(validate(TNormKind::Dombi, 0.0), ParameterOutOfDomain);
  CHECK_THROWS_AS(validate(TNormKind::Yager, -1.0), ParameterOutOfDomain);
  CHECK_THROWS_AS(validate(TNormKind::Hamacher, -0.1), ParameterOutOfDomain);
  CHECK_NOTHROW(validate(TNormKind::Hamacher, 0.0));
}

TEST_CASE("apply matches the worked examples") {
  CHECK(apply(validate(TNormKind::Product, 0), 0.5, 0.4) == doctest::Approx(0.2));
  CHECK(apply(validate(TNormKind::Minimum, 0), 0.3, 0.7) == doctest::Approx(0.3));
  CHECK(apply(validate(TNormKind::Yager, 1.0), 0.7, 0.5) == doctest::Approx(0.2));
  CHECK(apply(validate(TNormKind::AczelAlsina, 1.0), 0.5, 0.4) == doctest::Approx(0.2));
  // Dubois-Prade alpha=0.5: 0.9*0.8 / max(0.9, 0.8, 0.5)
  CHECK(apply(validate(TNormKind::DuboisPrade, 0.5), 0.9, 0.8) ==
        doctest::Approx(0.72 / 0.9).epsilon(1e-12));
  // Dombi alpha=2 at x=y=0.5: 1/(1+sqrt(2))
  CHECK(apply(validate(TNormKind::Dombi, 2.0), 0.5, 0.5) ==
        doctest::Approx(1.0 / (1.0 + std::sqrt(2.0))).epsilon(1e-12));
  for (const auto& t : one_per_kind()) {
    CHECK(apply(t, 0.42, 1.0) == doctest::Approx(0.42).epsilon(1e-12));
  }
}

TEST_CASE("apply rejects inputs outside the unit interval") {
  auto t = validate(TNormKind::Product, 0);
  CHECK_THROWS_AS(apply(t, -0.1, 0.5), DomainError);
  CHECK_THROWS_AS(apply(t, 0.5, 1.1), DomainError);
}

TEST_CASE("fold") {
  auto prod = validate(TNormKind::Product, 0);
  auto mini = validate(TNormKind::Minimum, 0);
  std::vector<double> a{0.5, 0.4, 0.5};
  std::vector<double> b{0.9, 0.2, 0.6};
  std::vector<double> c{0.37};
  CHECK(fold(prod, a) == doctest::Approx(0.1));
  CHECK(fold(mini, b) == doctest::Approx(0.2));
  for (const auto& t : one_per_kind()) CHECK(fold(t, c) == 0.37);
  CHECK_THROWS_AS(fold(prod, std::vector<double>{}), EmptyInput);
}

TEST_CASE("axioms hold on randomized samples across the alpha grids") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < kTNormKindCount; ++i) {
    auto kind = static_cast<TNormKind>(i);
    for (double alpha : alpha_grid(kind)) {
      auto t = validate(kind, alpha);
      for (int trial = 0; trial < 400; ++trial) {
        double x = unit(rng), y = unit(rng), z = unit(rng);
        CHECK(apply(t, x, y) == apply(t, y, x));  // exact
        CHECK(std::abs(apply(t, apply(t, x, y), z) - apply(t, x, apply(t, y, z))) <=
              1e-9);
        CHECK(std::abs(apply(t, x, 1.0) - x) <= 1e-12);
        CHECK(apply(t, x, 0.0) <= 1e-12);
        double lo = std::min(y, z), hi = std::max(y, z);
        CHECK(apply(t, x, lo) <= apply(t, x, hi) + 1e-12);
        CHECK(apply(t, x, y) <= std::min(x, y) + 1e-12);
      }
    }
  }
}

TEST_CASE("parametric families reduce to known norms at special alphas") {
  auto lukasiewicz = [](double x, double y) { return std::max(x + y - 1.0, 0.0); };
  auto hamacher_product = [](double x, double y) {
    return x + y - x * y == 0.0 ? 0.0 : x * y / (x + y - x * y);
  };
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      double x = i / 20.0, y = j / 20.0;
      CHECK(apply(validate(TNormKind::Yager, 1.0), x, y) ==
            doctest::Approx(lukasiewicz(x, y)).epsilon(1e-12));
      CHECK(apply(validate(TNormKind::SugenoWeber, 0.0), x, y) ==
            doctest::Approx(lukasiewicz(x, y)).epsilon(1e-12));
      CHECK(apply(validate(TNormKind::Hamacher, 1.0), x, y) ==
            doctest::Approx(x * y).epsilon(1e-12));
      CHECK(apply(validate(TNormKind::AczelAlsina, 1.0), x, y) ==
            doctest::Approx(x * y).epsilon(1e-12));
      CHECK(apply(validate(TNormKind::Dombi, 1.0), x, y) ==
            doctest::Approx(hamacher_product(x, y)).epsilon(1e-12));
      CHECK(apply(validate(TNormKind::DuboisPrade, 1.0), x, y) ==
            doctest::Approx(x * y).epsilon(1e-12));
      CHECK(apply(validate(TNormKind::DuboisPrade, 0.0), x, y) ==
            doctest::Approx(std::min(x, y)).epsilon(1e-12));
    }
  }
}

TEST_CASE("kind names round-trip") {
  for (int i = 0; i < kTNormKindCount; ++i) {
    auto kind = static_cast<TNormKind>(i);
    CHECK(parse_kind(kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_kind("lukasiewicz"), ParameterOutOfDomain);
}
