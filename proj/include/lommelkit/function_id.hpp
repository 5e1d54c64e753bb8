#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lommelkit {

enum class FunctionKind { BesselJ, BesselY, Cylinder, BesselJPrime, Lommel, AssocLommel };

std::string_view to_string(FunctionKind kind);
FunctionKind function_kind_from_string(std::string_view name);

/// Identifies one member of the Bessel/Lommel family.
///
/// `alpha` is set exactly for Cylinder (C_nu^alpha = cos(alpha) J_nu - sin(alpha) Y_nu,
/// alpha in [0, pi)); `degree` is set exactly for the two Lommel kinds, where
/// `order` is the nu of R_{m,nu} or R*_{m,nu}.
struct FunctionId {
  FunctionKind kind = FunctionKind::BesselJ;
  double order = 0.0;
  std::optional<double> alpha;
  std::optional<int> degree;

  static FunctionId bessel_j(double nu) { return {FunctionKind::BesselJ, nu, {}, {}}; }
  static FunctionId bessel_y(double nu) { return {FunctionKind::BesselY, nu, {}, {}}; }
  static FunctionId bessel_j_prime(double nu) { return {FunctionKind::BesselJPrime, nu, {}, {}}; }
  static FunctionId cylinder(double alpha, double nu) {
    return {FunctionKind::Cylinder, nu, alpha, {}};
  }
  static FunctionId lommel(int m, double nu) { return {FunctionKind::Lommel, nu, {}, m}; }
  static FunctionId assoc_lommel(int m, double nu) {
    return {FunctionKind::AssocLommel, nu, {}, m};
  }

  /// Throws DomainError when the alpha/degree presence rules are broken.
  void validate() const;

  bool operator==(const FunctionId&) const = default;
};

/// Ascending positive zeros of one function.
///
/// residuals[i] is |f(zeros[i])|; each satisfies
/// residuals[i] < tolerance * max(1, |f'(zeros[i])|). For the Lommel kinds
/// f is the polynomial divided by the sum of the absolute values of its
/// terms at that point, so residuals are relative evaluation residuals.
struct ZeroList {
  FunctionId fid;
  std::vector<double> zeros;
  std::vector<double> residuals;
  std::string method;
  double tolerance = 0.0;
  bool operator==(const ZeroList&) const = default;
};

}  // namespace lommelkit
