#include "lelong/error.hpp"

namespace lelong {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInClass: return "NotInClass";
    case ErrorKind::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorKind::NotLowerSet: return "NotLowerSet";
    case ErrorKind::IsLowerSet: return "IsLowerSet";
    case ErrorKind::NonFiniteObjective: return "NonFiniteObjective";
    case ErrorKind::DeltaTooLarge: return "DeltaTooLarge";
    case ErrorKind::GlueMismatch: return "GlueMismatch";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NotDecreasing: return "NotDecreasing";
    case ErrorKind::NeverBelow: return "NeverBelow";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::StencilHitsSingularity: return "StencilHitsSingularity";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

}  // namespace lelong
