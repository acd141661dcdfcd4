#pragma once

#include <stdexcept>
#include <string>

namespace frbcs {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParameterOutOfDomain : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyDataset : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooFewPatterns : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientAttributes : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFiniteInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace frbcs
