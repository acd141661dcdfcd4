#pragma once

#include <array>
#include <string>

#include "frbcs/errors.hpp"

namespace frbcs {

/// Identifies one triangular fuzzy set inside the 14-set family of
/// uniform partitions with granularities 2..5.
struct FuzzySetId {
  int granularity;  // in {2,3,4,5}
  int index;        // 1-based, in 1..granularity

  bool operator==(const FuzzySetId&) const = default;
};

struct FuzzySet {
  FuzzySetId id;
  double peak;       // (index-1)/(granularity-1)
  double halfwidth;  // 1/(granularity-1)
};

inline constexpr int kFamilySize = 14;

/// The 14 sets in deterministic order: granularity ascending, index ascending.
const std::array<FuzzySet, kFamilySize>& family();

/// Index of a set id inside family(), in 0..13.
int family_index(FuzzySetId id);

/// Triangular membership grade max(1 - |x - peak|/halfwidth, 0).
/// Throws DomainError when x is outside [0,1].
double membership(const FuzzySet& s, double x);

/// Display name used in rule dumps, e.g. "L5.3".
std::string set_name(FuzzySetId id);

}  // namespace frbcs
