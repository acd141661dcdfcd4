#include "frbcs/rule_engine.hpp"

#include <cstdio>
#include <vector>

namespace frbcs {

namespace {

struct Candidate {
  bool emitted = false;
  Rule rule{};
};

// Membership grades of every pattern in every (attribute, fuzzy set) cell,
// laid out as table[attr * 14 + set][pattern].
std::vector<std::vector<double>> membership_table(const Dataset& train) {
  std::size_t n = train.dimensionality();
  std::size_t m = train.size();
  const auto& fam = family();
  std::vector<std::vector<double>> table(n * kFamilySize, std::vector<double>(m));
  for (std::size_t a = 0; a < n; ++a) {
    for (int s = 0; s < kFamilySize; ++s) {
      auto& col = table[a * kFamilySize + s];
      for (std::size_t p = 0; p < m; ++p) {
        col[p] = membership(fam[s], train.patterns[p][a]);
      }
    }
  }
  return table;
}

// Scores one antecedent (attribute pair + fuzzy set pair) against the whole
// training set and decides whether a rule is emitted for it.
Candidate score_antecedent(const Dataset& train, const TNorm& t, WeightScheme scheme,
                           const std::vector<std::vector<double>>& table, int attr_a,
                           int attr_b, int set_a, int set_b) {
  std::size_t m = train.size();
  int num_classes = train.class_count();
  const auto& col_a = table[attr_a * kFamilySize + set_a];
  const auto& col_b = table[attr_b * kFamilySize + set_b];

  std::vector<double> class_sum(num_classes, 0.0);
  double total = 0.0;
  for (std::size_t p = 0; p < m; ++p) {
    double mu = apply(t, col_a[p], col_b[p]);
    class_sum[train.labels[p]] += mu;
    total += mu;
  }

  Candidate cand;
  if (total == 0.0) return cand;

  std::vector<double> conf(num_classes), cs(num_classes);
  for (int c = 0; c < num_classes; ++c) {
    conf[c] = class_sum[c] / total;
    cs[c] = conf[c] * (class_sum[c] / static_cast<double>(m));
  }

  // Consequent: unique argmax of confidence x support, exact-equality ties
  // leave the rule ungenerated.
  int best = 0;
  bool tie = false;
  for (int c = 1; c < num_classes; ++c) {
    if (cs[c] > cs[best]) {
      best = c;
      tie = false;
    } else if (cs[c] == cs[best]) {
      tie = true;
    }
  }
  if (tie || cs[best] <= 0.0) return cand;

  double conf_sum = 0.0;
  for (int c = 0; c < num_classes; ++c) {
    if (c != best) conf_sum += conf[c];
  }
  double weight =
      scheme == WeightScheme::CertaintyFactor ? conf[best] - conf_sum : cs[best];
  if (weight <= 0.0) return cand;

  cand.emitted = true;
  cand.rule = Rule{{attr_a, family()[set_a].id},
                   {attr_b, family()[set_b].id},
                   best,
                   conf[best],
                   class_sum[best] / static_cast<double>(m),
                   weight};
  return cand;
}

RuleSet generate_impl(const Dataset& train, const TNorm& t, WeightScheme scheme,
                      bool parallel) {
  if (train.patterns.empty()) throw EmptyDataset("generate: empty training set");
  std::size_t n = train.dimensionality();
  if (n < 2) throw InsufficientAttributes("generate: need at least 2 attributes");

  auto table = membership_table(train);

  // Attribute pairs in lexicographic order.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < static_cast<int>(n); ++i) {
    for (int j = i + 1; j < static_cast<int>(n); ++j) pairs.emplace_back(i, j);
  }

  const int cells = kFamilySize * kFamilySize;
  std::vector<Candidate> cands(pairs.size() * cells);

  // Each slot depends only on its own antecedent, so the grid can be filled
  // in any order; the serial collection pass below fixes the rule order.
  const long total_slots = static_cast<long>(cands.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (long slot = 0; slot < total_slots; ++slot) {
    auto [attr_a, attr_b] = pairs[slot / cells];
    int cell = static_cast<int>(slot % cells);
    cands[slot] = score_antecedent(train, t, scheme, table, attr_a, attr_b,
                                   cell / kFamilySize, cell % kFamilySize);
  }

  RuleSet rs{{}, t, n, train.class_count()};
  for (const auto& cand : cands) {
    if (cand.emitted) rs.rules.push_back(cand.rule);
  }
  return rs;
}

}  // namespace

double compatibility(const AntecedentAtom& a, const AntecedentAtom& b,
                     std::span<const double> pattern, const TNorm& t) {
  const auto& fam = family();
  double ma = membership(fam[family_index(a.fuzzy_set)], pattern[a.attribute]);
  double mb = membership(fam[family_index(b.fuzzy_set)], pattern[b.attribute]);
  return apply(t, ma, mb);
}

double confidence(const AntecedentAtom& a, const AntecedentAtom& b, int cls,
                  const Dataset& train, const TNorm& t) {
  double numer = 0.0, denom = 0.0;
  for (std::size_t p = 0; p < train.size(); ++p) {
    double mu = compatibility(a, b, train.patterns[p], t);
    denom += mu;
    if (train.labels[p] == cls) numer += mu;
  }
  return denom == 0.0 ? 0.0 : numer / denom;
}

double support(const AntecedentAtom& a, const AntecedentAtom& b, int cls,
               const Dataset& train, const TNorm& t) {
  double numer = 0.0;
  for (std::size_t p = 0; p < train.size(); ++p) {
    if (train.labels[p] == cls) numer += compatibility(a, b, train.patterns[p], t);
  }
  return numer / static_cast<double>(train.size());
}

double rule_weight(const AntecedentAtom& a, const AntecedentAtom& b, int consequent,
                   const Dataset& train, const TNorm& t) {
  double conf_sum = 0.0;
  for (int c = 0; c < train.class_count(); ++c) {
    if (c != consequent) conf_sum += confidence(a, b, c, train, t);
  }
  return confidence(a, b, consequent, train, t) - conf_sum;
}

RuleSet generate(const Dataset& train, const TNorm& t, WeightScheme scheme) {
  return generate_impl(train, t, scheme, true);
}

RuleSet generate_serial(const Dataset& train, const TNorm& t, WeightScheme scheme) {
  return generate_impl(train, t, scheme, false);
}

std::optional<int> classify(const RuleSet& rs, std::span<const double> pattern,
                            const TNorm& t) {
  if (pattern.size() != rs.dimensionality) {
    throw DimensionMismatch("pattern length " + std::to_string(pattern.size()) +
                            " != dimensionality " + std::to_string(rs.dimensionality));
  }
  double best = 0.0;
  int best_class = -1;
  bool ambiguous = false;
  for (const auto& r : rs.rules) {
    double score = compatibility(r.first, r.second, pattern, t) * r.weight;
    if (score > best) {
      best = score;
      best_class = r.consequent;
      ambiguous = false;
    } else if (score == best && best > 0.0 && r.consequent != best_class) {
      ambiguous = true;
    }
  }
  if (best <= 0.0 || ambiguous) return std::nullopt;
  return best_class;
}

std::string dump_rule(const Rule& r) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "attr%d is %s AND attr%d is %s => class %d (conf=%.6f, supp=%.6f, CF=%.6f)",
                r.first.attribute, set_name(r.first.fuzzy_set).c_str(),
                r.second.attribute, set_name(r.second.fuzzy_set).c_str(), r.consequent,
                r.confidence, r.support, r.weight);
  return buf;
}

}  // namespace frbcs
