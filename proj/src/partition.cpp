#include "frbcs/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace frbcs {

namespace {

std::array<FuzzySet, kFamilySize> build_family() {
  std::array<FuzzySet, kFamilySize> out{};
  int pos = 0;
  for (int g = 2; g <= 5; ++g) {
    double hw = 1.0 / (g - 1);
    for (int i = 1; i <= g; ++i) {
      out[pos++] = FuzzySet{{g, i}, (i - 1.0) / (g - 1.0), hw};
    }
  }
  return out;
}

}  // namespace

const std::array<FuzzySet, kFamilySize>& family() {
  static const auto fam = build_family();
  return fam;
}

int family_index(FuzzySetId id) {
  if (id.granularity < 2 || id.granularity > 5 || id.index < 1 ||
      id.index > id.granularity) {
    throw std::out_of_range("invalid fuzzy set id");
  }
  // Offsets of granularities 2,3,4,5 are 0,2,5,9.
  static constexpr int offsets[] = {0, 2, 5, 9};
  return offsets[id.granularity - 2] + id.index - 1;
}

double membership(const FuzzySet& s, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("membership input outside [0,1]: " + std::to_string(x));
  }
  return std::max(1.0 - std::abs(x - s.peak) / s.halfwidth, 0.0);
}

std::string set_name(FuzzySetId id) {
  return "L" + std::to_string(id.granularity) + "." + std::to_string(id.index);
}

}  // namespace frbcs
