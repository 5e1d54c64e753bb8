#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: 50-digit power series, sign-change scans with bisection in the
// same precision, the raw three-term recurrence for Lommel polynomials, and
// exp-sinh quadrature of the K0 integral.

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

using mp = boost::multiprecision::cpp_bin_float_50;

inline mp pi() { return boost::math::constants::pi<mp>(); }

/// J_nu(x) for x > 0 by the power series; integer negative orders by reflection.
inline mp besselj(const mp& nu, const mp& x) {
  const mp rn = boost::multiprecision::round(nu);
  if (nu < 0 && nu == rn) {
    const long n = static_cast<long>(-rn);
    return (n % 2 ? -1 : 1) * besselj(-nu, x);
  }
  const mp h = x / 2;
  const mp q = h * h;
  mp term = boost::multiprecision::pow(h, nu) / boost::math::tgamma(nu + 1);
  mp sum = term;
  for (int k = 1; k < 2000; ++k) {
    term *= -q / (k * (k + nu));
    sum += term;
    if (abs(term) < abs(sum) * mp("1e-48") && k > x) break;
  }
  return sum;
}

/// Y_nu for non-integer nu by the connection formula.
inline mp bessely(const mp& nu, const mp& x) {
  const mp s = sin(nu * pi());
  if (abs(s) < mp("1e-30")) throw std::invalid_argument("oracle::bessely needs non-integer order");
  return (besselj(nu, x) * cos(nu * pi()) - besselj(-nu, x)) / s;
}

/// Y_0 by its logarithmic series.
inline mp bessely0(const mp& x) {
  const mp q = x * x / 4;
  const mp gamma_e = boost::math::constants::euler<mp>();
  mp term = 1;
  mp harmonic = 0;
  mp sum = 0;
  for (int k = 1; k < 2000; ++k) {
    term *= -q / (mp(k) * k);
    harmonic += mp(1) / k;
    const mp add = -term * harmonic;
    sum += add;
    if (abs(add) < mp("1e-48") * (abs(sum) + 1) && k > x) break;
  }
  return 2 / pi() * ((log(x / 2) + gamma_e) * besselj(0, x) + sum);
}

/// k-th positive zero of f, scanning upward from x0 with the given step.
inline double kth_zero(const std::function<mp(const mp&)>& f, int k, double x0, double step = 0.05) {
  mp a = x0;
  mp fa = f(a);
  int found = 0;
  for (int i = 0; i < 200000; ++i) {
    const mp b = a + step;
    const mp fb = f(b);
    if ((fa < 0) != (fb < 0)) {
      if (++found == k) {
        mp lo = a, hi = b, flo = fa;
        for (int it = 0; it < 120; ++it) {
          const mp mid = (lo + hi) / 2;
          const mp fm = f(mid);
          if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        return static_cast<double>((lo + hi) / 2);
      }
    }
    a = b;
    fa = fb;
  }
  throw std::runtime_error("oracle::kth_zero: zero not found");
}

inline double besselj_zero(double nu, int k) {
  const mp n = nu;
  return kth_zero([n](const mp& x) { return besselj(n, x); }, k, 1e-3);
}

/// R_{m,nu}(x) from R_{-1} = 0, R_0 = 1 and R_{k+1} = 2(nu+k)/x R_k - R_{k-1}.
inline mp lommel(int m, const mp& nu, const mp& x) {
  if (m < 0) throw std::invalid_argument("oracle::lommel needs m >= 0");
  mp prev = 0;
  mp cur = 1;
  for (int k = 0; k < m; ++k) {
    const mp next = 2 * (nu + k) / x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// K_0(x) = int_0^inf exp(-x cosh t) dt.
inline double k0(double x) {
  boost::math::quadrature::exp_sinh<double> integrator;
  return integrator.integrate([x](double t) { return std::exp(-x * std::cosh(t)); });
}

}  // namespace oracle
