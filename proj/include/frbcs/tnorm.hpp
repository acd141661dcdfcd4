#pragma once

#include <span>
#include <string>

#include "frbcs/errors.hpp"

namespace frbcs {

/// The nine parametric T-norm families supported by the toolkit.
enum class TNormKind {
  Minimum,
  Product,
  Yager,
  SugenoWeber,
  Hamacher,
  SchweizerSklar,
  AczelAlsina,
  Dombi,
  DuboisPrade,
};

inline constexpr int kTNormKindCount = 9;

/// A validated T-norm operator: a family plus its real parameter.
/// Minimum and Product carry no parameter; their alpha is ignored.
struct TNorm {
  TNormKind kind;
  double alpha;
};

/// Canonical lowercase identifier used on the CLI and in reports
/// ("minimum", "product", ..., "dubois-prade").
std::string kind_name(TNormKind kind);

/// Inverse of kind_name. Throws ParameterOutOfDomain on unknown names.
TNormKind parse_kind(const std::string& name);

/// Parameter value used when none is given on the command line.
double default_alpha(TNormKind kind);

/// Checks alpha against the family's domain constraint and returns the
/// operator. Throws ParameterOutOfDomain with a message naming the
/// constraint when alpha is out of range.
TNorm validate(TNormKind kind, double alpha);

/// T(x, y) for x, y in [0, 1]. Singular points are defined by continuous
/// limit so that 0 stays an annihilator; results are clamped to [0, 1].
/// Throws DomainError when an argument is outside the unit interval.
double apply(const TNorm& t, double x, double y);

/// Left fold of apply over a non-empty list; a singleton folds to itself.
double fold(const TNorm& t, std::span<const double> values);

}  // namespace frbcs
