#pragma once

// Bessel-family evaluation for real order and non-negative real argument.
//
// Regimes (for order nu >= 0; negative orders go through the reflection
// formulas and report EvalMethod::Connection):
//   * power series             x <= 2, or x^2/4 <= nu + 1 (terms decrease from k = 0)
//   * Temme series / Steed CF   everything else below the Hankel threshold;
//                               J and Y are produced together
//   * Hankel expansion          x >= max(25, (nu + 1)^2 / 2)
//
// All functions are pure and thread-safe. Every EvalResult carries an
// absolute error estimate the implementation commits to; the regression
// fixture under tests/fixtures checks it against 30-digit references.

namespace lommelkit {

enum class EvalMethod { Series, BackwardRecurrence, Asymptotic, Connection, ContinuedFraction };

const char* to_string(EvalMethod method);

struct EvalResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  EvalMethod method = EvalMethod::Series;
};

/// J, J', Y, Y' at one point, with absolute error estimates for J and Y.
struct BesselPair {
  double j = 0.0;
  double jp = 0.0;
  double y = 0.0;
  double yp = 0.0;
  double j_error = 0.0;
  double y_error = 0.0;
  EvalMethod method = EvalMethod::Series;  // how J was obtained
  EvalMethod y_method = EvalMethod::BackwardRecurrence;
};

/// J_nu(x), x >= 0. Any finite real order is accepted; at x = 0 orders in
/// (-1, 0) and negative non-integers diverge and raise OverflowError.
EvalResult bessel_j(double nu, double x);

/// J'_nu(x) = (J_{nu-1}(x) - J_{nu+1}(x)) / 2. x = 0 only for nu >= 1 or nu = 0.
EvalResult bessel_j_prime(double nu, double x);

/// Y_nu(x), x > 0.
EvalResult bessel_y(double nu, double x);

/// Y'_nu(x), x > 0.
EvalResult bessel_y_prime(double nu, double x);

/// J, J', Y, Y' together; x > 0.
BesselPair bessel_jy(double nu, double x);

/// J and J' only (y fields left at zero); x > 0. Never touches Y where it can
/// be avoided, so it stays finite at small x for large orders.
BesselPair bessel_j_pair(double nu, double x);

/// Normalised function Gamma(nu+1) (x/2)^{-nu} J_nu(x); equals 1 at x = 0. nu > -1.
EvalResult bessel_j_scaled(double nu, double x);

/// x-derivative of bessel_j_scaled. nu > -1.
EvalResult bessel_j_scaled_prime(double nu, double x);

/// C_nu^alpha(x) = cos(alpha) J_nu(x) - sin(alpha) Y_nu(x), alpha in [0, pi).
/// alpha == 0 returns bessel_j unchanged (Y is never evaluated).
EvalResult cylinder(double alpha, double nu, double x);
EvalResult cylinder_prime(double alpha, double nu, double x);

/// Modified Bessel function K_0(x), x > 0.
EvalResult modified_k0(double x);

/// Integrand of the order derivative of a cylinder zero c, written in u = sinh t:
///   K_0(2 c u) (u + sqrt(1 + u^2))^{-2 nu} / sqrt(1 + u^2).
/// Integrating over u in (0, inf) and multiplying by 2c gives dc/dnu.
double watson_integrand(double c, double nu, double u);

/// sin(pi x) and cos(pi x), exact at integers and half-integers.
double sin_pi(double x);
double cos_pi(double x);

}  // namespace lommelkit
