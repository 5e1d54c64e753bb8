#include "lommelkit/function_id.hpp"

#include <cmath>
#include <numbers>

#include "lommelkit/errors.hpp"

namespace lommelkit {

std::string_view to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::BesselJ: return "BesselJ";
    case FunctionKind::BesselY: return "BesselY";
    case FunctionKind::Cylinder: return "Cylinder";
    case FunctionKind::BesselJPrime: return "BesselJPrime";
    case FunctionKind::Lommel: return "Lommel";
    case FunctionKind::AssocLommel: return "AssocLommel";
  }
  return "unknown";
}

FunctionKind function_kind_from_string(std::string_view name) {
  for (auto k : {FunctionKind::BesselJ, FunctionKind::BesselY, FunctionKind::Cylinder,
                 FunctionKind::BesselJPrime, FunctionKind::Lommel, FunctionKind::AssocLommel}) {
    if (to_string(k) == name) return k;
  }
  throw DomainError("unknown function kind '" + std::string(name) + "'");
}

void FunctionId::validate() const {
  const bool is_cylinder = kind == FunctionKind::Cylinder;
  const bool is_lommel = kind == FunctionKind::Lommel || kind == FunctionKind::AssocLommel;
  if (alpha.has_value() != is_cylinder) {
    throw DomainError("alpha must be given exactly for Cylinder functions");
  }
  if (degree.has_value() != is_lommel) {
    throw DomainError("degree must be given exactly for Lommel polynomials");
  }
  if (is_cylinder && !(*alpha >= 0.0 && *alpha < std::numbers::pi)) {
    throw DomainError("cylinder angle alpha must lie in [0, pi)");
  }
  if (!std::isfinite(order)) throw DomainError("order must be finite");
}

}  // namespace lommelkit
