#include <doctest.h>

#include "frbcs/partition.hpp"

using namespace frbcs;

TEST_CASE("family has the 14 sets in deterministic order") {
  const auto& fam = family();
  REQUIRE(fam.size() == 14);
  CHECK(fam.front().id.granularity == 2);
  CHECK(fam.front().id.index == 1);
  CHECK(fam.front().peak == 0.0);
  CHECK(fam.front().halfwidth == 1.0);
  CHECK(fam.back().id.granularity == 5);
  CHECK(fam.back().id.index == 5);
  CHECK(fam.back().peak == 1.0);
  CHECK(fam.back().halfwidth == 0.25);

  int pos = 0;
  for (int g = 2; g <= 5; ++g) {
    double prev_peak = -1.0;
    for (int i = 1; i <= g; ++i, ++pos) {
      const auto& s = fam[pos];
      CHECK(s.id.granularity == g);
      CHECK(s.id.index == i);
      CHECK(family_index(s.id) == pos);
      if (i == 1) CHECK(s.peak == 0.0);
      if (i == g) CHECK(s.peak == 1.0);
      if (prev_peak >= 0.0) {
        CHECK(s.peak - prev_peak == doctest::Approx(s.halfwidth).epsilon(1e-15));
      }
      prev_peak = s.peak;
    }
  }
}

TEST_CASE("membership matches the worked examples") {
  const auto& fam = family();
  CHECK(membership(fam[family_index({2, 1})], 0.25) == doctest::Approx(0.75));
  CHECK(membership(fam[family_index({5, 3})], 0.5) == 1.0);
  CHECK(membership(fam[family_index({3, 2})], 0.9) ==
        doctest::Approx(0.2).epsilon(1e-12));
  CHECK_THROWS_AS(membership(fam[0], 1.5), DomainError);
  CHECK_THROWS_AS(membership(fam[0], -0.5), DomainError);
}

TEST_CASE("uniform triangular partitions are Ruspini partitions") {
  for (int g = 2; g <= 5; ++g) {
    for (int step = 0; step <= 1000; ++step) {
      double x = step / 1000.0;
      double sum = 0.0;
      for (int i = 1; i <= g; ++i) {
        double mu = membership(family()[family_index({g, i})], x);
        CHECK(mu >= 0.0);
        CHECK(mu <= 1.0);
        sum += mu;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("peak normality and support boundary") {
  for (const auto& s : family()) {
    CHECK(membership(s, s.peak) == 1.0);
    // The representable neighbour of peak +/- halfwidth can land a last bit
    // inside the support; anything at or past it is (numerically) zero.
    double edge = s.peak + s.halfwidth;
    if (edge <= 1.0) CHECK(membership(s, edge) <= 1e-15);
    double low = s.peak - s.halfwidth;
    if (low >= 0.0) CHECK(membership(s, low) <= 1e-15);
    if (edge + 1e-9 <= 1.0) CHECK(membership(s, edge + 1e-9) == 0.0);
    if (low - 1e-9 >= 0.0) CHECK(membership(s, low - 1e-9) == 0.0);
  }
}

TEST_CASE("set names") {
  CHECK(set_name({5, 3}) == "L5.3");
  CHECK(set_name({2, 1}) == "L2.1");
}
