#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frbcs/dataset.hpp"
#include "frbcs/partition.hpp"
#include "frbcs/tnorm.hpp"

namespace frbcs {

/// One antecedent condition: "attribute <attr> is <fuzzy set>".
struct AntecedentAtom {
  int attribute;
  FuzzySetId fuzzy_set;
};

/// A two-antecedent fuzzy classification rule with its cached merits.
struct Rule {
  AntecedentAtom first;
  AntecedentAtom second;  // distinct attribute from first
  int consequent;
  double confidence;
  double support;
  double weight;  // certainty grade CF
};

struct RuleSet {
  std::vector<Rule> rules;
  TNorm tnorm;
  std::size_t dimensionality;
  int class_count;
};

/// How the certainty grade of a generated rule is computed.
enum class WeightScheme {
  CertaintyFactor,  // consequent confidence minus summed rival confidences
  ConfTimesSupp,    // product of confidence and support
};

/// Aggregated membership of a pattern in a rule antecedent under t.
double compatibility(const AntecedentAtom& a, const AntecedentAtom& b,
                     std::span<const double> pattern, const TNorm& t);

/// Fraction of the antecedent's total fuzzy coverage that belongs to the
/// class; 0 when the antecedent covers nothing.
double confidence(const AntecedentAtom& a, const AntecedentAtom& b, int cls,
                  const Dataset& train, const TNorm& t);

/// Class-restricted fuzzy coverage divided by the pattern count.
double support(const AntecedentAtom& a, const AntecedentAtom& b, int cls,
               const Dataset& train, const TNorm& t);

/// Certainty grade: confidence of the consequent minus the sum of the
/// confidences of all other classes over the same antecedent.
double rule_weight(const AntecedentAtom& a, const AntecedentAtom& b, int consequent,
                   const Dataset& train, const TNorm& t);

/// Enumerates all attribute pairs x 14 x 14 fuzzy set combinations, picks the
/// consequent with the unique maximal confidence x support (skipping ties and
/// zero coverage), and keeps rules with positive weight. Deterministic:
/// rules appear in enumeration order regardless of thread count.
RuleSet generate(const Dataset& train, const TNorm& t,
                 WeightScheme scheme = WeightScheme::CertaintyFactor);

/// Single-threaded from-definition implementation of generate, kept as a
/// reference for testing and benchmarking the parallel kernel.
RuleSet generate_serial(const Dataset& train, const TNorm& t,
                        WeightScheme scheme = WeightScheme::CertaintyFactor);

/// Single-winner classification: the consequent of the rule maximizing
/// compatibility x weight. Returns nullopt (rejection) when no rule covers
/// the pattern or distinct classes tie at the maximum.
std::optional<int> classify(const RuleSet& rs, std::span<const double> pattern,
                            const TNorm& t);

/// One rule per line in the dump format
/// `attr<i> is L<g>.<k> AND attr<j> is L<g>.<k> => class <c> (conf=..., supp=..., CF=...)`.
std::string dump_rule(const Rule& r);

}  // namespace frbcs
