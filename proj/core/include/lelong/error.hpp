#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lelong {

enum class ErrorKind {
  InvalidVertex,
  DimensionMismatch,
  NotInClass,
  ZeroCoordinate,
  NotLowerSet,
  IsLowerSet,
  NonFiniteObjective,
  DeltaTooLarge,
  GlueMismatch,
  BadParameters,
  NotDecreasing,
  NeverBelow,
  NotNested,
  StencilHitsSingularity,
  Schema,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lelong
