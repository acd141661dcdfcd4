#include "frbcs/tnorm.hpp"

#include <algorithm>
#include <cmath>

namespace frbcs {

namespace {

void check_unit(double v, const char* arg) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError(std::string(arg) + " outside [0,1]: " + std::to_string(v));
  }
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double yager(double alpha, double x, double y) {
  double s = std::pow(1.0 - x, alpha) + std::pow(1.0 - y, alpha);
  return std::max(1.0 - std::pow(s, 1.0 / alpha), 0.0);
}

double sugeno_weber(double alpha, double x, double y) {
  if (alpha == -1.0) {
    // Limit of the family at alpha = -1 is the drastic product.
    if (x == 1.0) return y;
    if (y == 1.0) return x;
    return 0.0;
  }
  // alpha * (x*y) keeps the evaluation symmetric in x and y.
  return std::max((x + y - 1.0 + alpha * (x * y)) / (1.0 + alpha), 0.0);
}

double hamacher(double alpha, double x, double y) {
  double denom = alpha + (1.0 - alpha) * (x + y - x * y);
  if (denom == 0.0) return 0.0;  // alpha = 0 with x = y = 0
  return x * y / denom;
}

double schweizer_sklar(double alpha, double x, double y) {
  if (x == 0.0 || y == 0.0) return 0.0;
  double s = std::pow(x, -alpha) + std::pow(y, -alpha) - 1.0;
  return std::pow(s, -1.0 / alpha);
}

double aczel_alsina(double alpha, double x, double y) {
  if (x == 0.0 || y == 0.0) return 0.0;
  double s = std::pow(-std::log(x), alpha) + std::pow(-std::log(y), alpha);
  return std::exp(-std::pow(s, 1.0 / alpha));
}

double dombi(double alpha, double x, double y) {
  if (x == 0.0 || y == 0.0) return 0.0;
  double s = std::pow((1.0 - x) / x, alpha) + std::pow((1.0 - y) / y, alpha);
  return 1.0 / (1.0 + std::pow(s, 1.0 / alpha));
}

double dubois_prade(double alpha, double x, double y) {
  double denom = std::max({x, y, alpha});
  if (denom == 0.0) return 0.0;  // alpha = 0 with x = y = 0
  return x * y / denom;
}

}  // namespace

std::string kind_name(TNormKind kind) {
  switch (kind) {
    case TNormKind::Minimum: return "minimum";
    case TNormKind::Product: return "product";
    case TNormKind::Yager: return "yager";
    case TNormKind::SugenoWeber: return "sugeno-weber";
    case TNormKind::Hamacher: return "hamacher";
    case TNormKind::SchweizerSklar: return "schweizer-sklar";
    case TNormKind::AczelAlsina: return "aczel-alsina";
    case TNormKind::Dombi: return "dombi";
    case TNormKind::DuboisPrade: return "dubois-prade";
  }
  return "?";
}

TNormKind parse_kind(const std::string& name) {
  for (int i = 0; i < kTNormKindCount; ++i) {
    auto kind = static_cast<TNormKind>(i);
    if (kind_name(kind) == name) return kind;
  }
  throw ParameterOutOfDomain("unknown T-norm name: '" + name + "'");
}

double default_alpha(TNormKind kind) {
  return kind == TNormKind::DuboisPrade ? 0.5 : 2.0;
}

TNorm validate(TNormKind kind, double alpha) {
  if (!std::isfinite(alpha)) {
    throw ParameterOutOfDomain(kind_name(kind) + ": alpha must be finite");
  }
  switch (kind) {
    case TNormKind::Minimum:
    case TNormKind::Product:
      return {kind, 0.0};
    case TNormKind::Yager:
    case TNormKind::SchweizerSklar:
    case TNormKind::AczelAlsina:
    case TNormKind::Dombi:
      if (!(alpha > 0.0)) {
        throw ParameterOutOfDomain(kind_name(kind) + ": requires alpha > 0, got " +
                                   std::to_string(alpha));
      }
      break;
    case TNormKind::SugenoWeber:
      if (!(alpha >= -1.0)) {
        throw ParameterOutOfDomain("sugeno-weber: requires alpha >= -1, got " +
                                   std::to_string(alpha));
      }
      break;
    case TNormKind::Hamacher:
      if (!(alpha >= 0.0)) {
        throw ParameterOutOfDomain("hamacher: requires alpha >= 0, got " +
                                   std::to_string(alpha));
      }
      break;
    case TNormKind::DuboisPrade:
      if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw ParameterOutOfDomain("dubois-prade: requires alpha in [0,1], got " +
                                   std::to_string(alpha));
      }
      break;
  }
  return {kind, alpha};
}

double apply(const TNorm& t, double x, double y) {
  check_unit(x, "x");
  check_unit(y, "y");
  double r = 0.0;
  switch (t.kind) {
    case TNormKind::Minimum: r = std::min(x, y); break;
    case TNormKind::Product: r = x * y; break;
    case TNormKind::Yager: r = yager(t.alpha, x, y); break;
    case TNormKind::SugenoWeber: r = sugeno_weber(t.alpha, x, y); break;
    case TNormKind::Hamacher: r = hamacher(t.alpha, x, y); break;
    case TNormKind::SchweizerSklar: r = schweizer_sklar(t.alpha, x, y); break;
    case TNormKind::AczelAlsina: r = aczel_alsina(t.alpha, x, y); break;
    case TNormKind::Dombi: r = dombi(t.alpha, x, y); break;
    case TNormKind::DuboisPrade: r = dubois_prade(t.alpha, x, y); break;
  }
  return clamp01(r);
}

double fold(const TNorm& t, std::span<const double> values) {
  if (values.empty()) throw EmptyInput("fold over empty list");
  double acc = values[0];
  check_unit(acc, "values[0]");
  for (std::size_t i = 1; i < values.size(); ++i) {
    acc = apply(t, acc, values[i]);
  }
  return acc;
}

}  // namespace frbcs
