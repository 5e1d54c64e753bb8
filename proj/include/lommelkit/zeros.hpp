#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lommelkit/function_id.hpp"

namespace lommelkit {

inline constexpr double kDefaultZeroTolerance = 1e-12;

/// f and df/dx for any member of the family (Lommel kinds included).
struct FunctionValue {
  double f = 0.0;
  double fp = 0.0;
};

FunctionValue evaluate(const FunctionId& fid, double x);

/// First K positive zeros of fid, ascending.
///
/// BesselJ, BesselY and BesselJPrime are scanned from a proven lower bound on
/// the first zero in steps of pi/4 (zero spacing stays near pi). A cylinder
/// function with alpha in (0, pi) and nu >= 0 has exactly one zero between
/// consecutive zeros of J_nu (and one below j_{nu,1}), so those brackets are
/// used directly. Every bracket is refined by safeguarded Newton, falling back
/// to plain bisection when Newton stalls. For the Lommel kinds this forwards to
/// lommel_roots and K only caps the count.
ZeroList zeros(const FunctionId& fid, int K, double tol = kDefaultZeroTolerance);

/// The k-th zero only (1-based); same machinery as zeros().
double zero(const FunctionId& fid, int k, double tol = kDefaultZeroTolerance);

/// dj_{nu,k}/dnu by three independent routes.
struct OrderDerivative {
  double nu = 0.0;
  int k = 0;
  double zero = 0.0;
  double value_fd = 0.0;      // central difference of zeros, h = 1e-4
  double value_series = 0.0;  // (2/j) sum_{n>=0} R_{n,nu+1}(j)^2
  double value_watson = 0.0;  // 2j int_0^inf K_0(2j sinh t) exp(-2 nu t) dt
  double spread = 0.0;        // max pairwise relative difference
  int series_terms = 0;
};

/// nu > 0, k >= 1.
OrderDerivative dj_dnu(double nu, int k);

/// The Ismail-Muldoon sum on its own, for an already known zero j of J_nu.
/// R_{n,nu+1}(j) = J_{nu+n+1}(j) / J_{nu+1}(j) is the minimal solution of the
/// Bessel recurrence, so it is generated by Miller's backward recurrence.
double dj_dnu_series(double nu, double j, int* terms_used = nullptr);

/// The Watson integral on its own for a zero c of any cylinder function of order nu.
double dj_dnu_watson(double nu, double c);

struct MonotonicityVerdict {
  bool increasing = true;
  std::vector<double> nus;
  std::vector<double> zeros;
  std::optional<std::size_t> first_violation;  // index i with zeros[i] >= zeros[i+1]
};

/// c_{nu,k} of C^alpha over the given ascending orders.
MonotonicityVerdict cylinder_zero_monotonicity(double alpha, const std::vector<double>& nus, int k);

}  // namespace lommelkit
