#pragma once

#include <string>
#include <vector>

#include "lommelkit/function_id.hpp"

// Lommel polynomials R_{m,nu}(x) and the associated polynomials
// R*_{m,nu} = (R_{m,nu} - R_{m-2,nu+2}) / 2, both polynomials in 1/x.
//
// Coefficients are running products (nu+k)(nu+k+1)...(nu+m-k-1), so there is
// no Gamma-function pole anywhere and no overflow for the degrees used here.

namespace lommelkit {

enum class LommelKind { Plain, Associated };

const char* to_string(LommelKind kind);
LommelKind lommel_kind_from_string(const std::string& name);

/// coeffs[k] multiplies (x/2)^{2k-m}, k = 0..floor(m/2).
struct LommelCoefficients {
  int m = 0;
  double nu = 0.0;
  LommelKind kind = LommelKind::Plain;
  std::vector<double> coeffs;

  double eval(double x) const;
  double eval_prime(double x) const;
  /// Sum of |term| at x; the natural scale for relative residuals.
  double term_magnitude(double x) const;

  bool operator==(const LommelCoefficients&) const = default;
};

/// m >= 0.
LommelCoefficients lommel_coefficients(int m, double nu);
/// m >= 0.
LommelCoefficients assoc_coefficients(int m, double nu);

/// R_{m,nu}(x) for any integer m; negative degrees via R_{-n,nu} = -R_{n-2,nu-n+1}.
double lommel_eval(int m, double nu, double x);
double lommel_eval_prime(int m, double nu, double x);

/// R_{m,nu}(x), m >= -1, by running the three-term recurrence up from R_{-1} = 0, R_0 = 1.
double lommel_eval_recurrence(int m, double nu, double x);

/// R*_{m,nu}(x) for any integer m, straight from the defining half-difference.
double assoc_eval(int m, double nu, double x);
double assoc_eval_prime(int m, double nu, double x);

/// Positive zeros of R_{n,lambda+1} (Plain, lambda > -1) or of R*_{n,lambda}
/// (Associated, lambda > 0), ascending. There are exactly floor(n/2) of them.
///
/// The zeros in t = 1/x are the eigenvalues of a symmetric tridiagonal
/// (Jacobi) matrix; each is then polished by Newton on the polynomial itself
/// and kept only if a sign change is seen within 1e-6 (1 + x) of it.
ZeroList lommel_roots(int n, double lambda, LommelKind kind);

/// Relative residuals of the two Lommel Wronskian identities:
///   W[R_{m-2,nu+1}, R_{m-1,nu+1}] = -(2/x^2) sum_{k=0}^{m-2} (nu+k+1) R_{k,nu+1}^2
///   W[R*_{m+1,nu}, R*_{m,nu}]     =  (2/x^2) sum_{k=1}^{m} (nu+k) R*_{k,nu}^2 + nu/x^2
struct WronskianResidual {
  double plain = 0.0;
  double assoc = 0.0;
};

/// m >= 1, x > 0.
WronskianResidual lommel_wronskian_identity(int m, double nu, double x);

/// Roots eta of the terminating 2F1((1-n)/2, -n/2; -n; eta^2), ascending.
/// eta_n,l is the large-nu slope of the l-th positive zero of R_{n,nu+1}.
struct EtaRoot {
  int n = 0;
  std::vector<double> roots;
  std::vector<double> residuals;  // |2F1| / sum |terms| at eta^2
  bool operator==(const EtaRoot&) const = default;
};

EtaRoot eta_limit(int n);

/// The Pochhammer ratio (-(m+1)/2)_{m/2} / (-m)_{m/2} for even m and
/// (-m/2)_{(m-1)/2} / (-m)_{(m-1)/2} for odd m.
double pochhammer_limit(int m);

}  // namespace lommelkit
