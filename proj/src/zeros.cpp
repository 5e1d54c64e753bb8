#include "lommelkit/zeros.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "lommelkit/errors.hpp"
#include "lommelkit/lommel.hpp"
#include "lommelkit/special_eval.hpp"

namespace lommelkit {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr double kScanStep = kPi / 4.0;
constexpr int kNewtonIterations = 60;
constexpr int kBisectionIterations = 200;
constexpr double kOrderStep = 1e-4;

using Fn = std::function<FunctionValue(double)>;

std::string bracket_text(double a, double b) {
  std::ostringstream os;
  os.precision(17);
  os << "[" << a << ", " << b << "]";
  return os.str();
}

// Safeguarded Newton inside a sign-change bracket, then plain bisection if
// Newton has not settled.
double refine(const Fn& f, double a, double b, double fa, double tol) {
  double lo = a;
  double hi = b;
  const bool rising = fa < 0.0;
  double x = 0.5 * (lo + hi);
  bool converged = false;
  for (int it = 0; it < kNewtonIterations; ++it) {
    const FunctionValue v = f(x);
    if (v.f == 0.0) return x;
    if ((v.f < 0.0) == rising) {
      lo = x;
    } else {
      hi = x;
    }
    double next = 0.5 * (lo + hi);
    if (v.fp != 0.0 && std::isfinite(v.fp)) {
      const double newton = x - v.f / v.fp;
      if (newton > lo && newton < hi) next = newton;
    }
    const double step = std::fabs(next - x);
    x = next;
    if (step <= 2.0 * kEps * std::fabs(x) || hi - lo <= 4.0 * kEps * std::fabs(x)) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    for (int it = 0; it < kBisectionIterations && hi - lo > 2.0 * kEps * std::fabs(x); ++it) {
      x = 0.5 * (lo + hi);
      const FunctionValue v = f(x);
      if (v.f == 0.0) return x;
      if ((v.f < 0.0) == rising) {
        lo = x;
      } else {
        hi = x;
      }
    }
    x = 0.5 * (lo + hi);
  }
  const FunctionValue v = f(x);
  if (std::fabs(v.f) > tol * std::max(1.0, std::fabs(v.fp))) {
    throw ConvergenceError("zero refinement missed the residual contract in bracket " +
                           bracket_text(a, b));
  }
  return x;
}

void push_zero(ZeroList& out, const Fn& f, double z) {
  out.zeros.push_back(z);
  out.residuals.push_back(std::fabs(f(z).f));
}

void scan(ZeroList& out, const Fn& f, double x0, int K, double tol) {
  double a = x0;
  double fa = f(a).f;
  while (fa == 0.0) {
    a += 1e-6 * (1.0 + a);
    fa = f(a).f;
  }
  while (static_cast<int>(out.zeros.size()) < K) {
    const double b = a + kScanStep;
    const double fb = f(b).f;
    if (fb == 0.0) {
      push_zero(out, f, b);
      a = b + 1e-9 * b;
      fa = f(a).f;
      continue;
    }
    if ((fa < 0.0) != (fb < 0.0)) push_zero(out, f, refine(f, a, b, fa, tol));
    a = b;
    fa = fb;
  }
}

Fn family_function(const FunctionId& fid) {
  return [fid](double x) { return evaluate(fid, x); };
}

// Sign-safe cylinder evaluation near the origin: Y_nu -> -infinity, so C -> +infinity.
Fn guarded_cylinder(double alpha, double nu) {
  return [alpha, nu](double x) {
    try {
      return evaluate(FunctionId::cylinder(alpha, nu), x);
    } catch (const OverflowError&) {
      return FunctionValue{std::numeric_limits<double>::max(), 0.0};
    }
  };
}

void cylinder_between_j_zeros(ZeroList& out, double alpha, double nu, int K, double tol) {
  const ZeroList jz = zeros(FunctionId::bessel_j(nu), K, tol);
  const Fn f = guarded_cylinder(alpha, nu);
  const Fn plain = family_function(FunctionId::cylinder(alpha, nu));
  for (int k = 0; k < K; ++k) {
    const double b = jz.zeros[static_cast<std::size_t>(k)];
    const double fb = f(b).f;
    double a = 0.0;
    double fa = 0.0;
    if (k == 0) {
      a = 0.5 * b;
      fa = f(a).f;
      for (int halving = 0; (fa < 0.0) == (fb < 0.0) && halving < 1100; ++halving) {
        a *= 0.5;
        fa = f(a).f;
      }
    } else {
      a = jz.zeros[static_cast<std::size_t>(k - 1)];
      fa = f(a).f;
    }
    if ((fa < 0.0) == (fb < 0.0)) {
      throw ConvergenceError("no sign change of the cylinder function in bracket " +
                             bracket_text(a, b));
    }
    const double z = refine(f, a, b, fa, tol);
    out.zeros.push_back(z);
    out.residuals.push_back(std::fabs(plain(z).f));
  }
}

}  // namespace

FunctionValue evaluate(const FunctionId& fid, double x) {
  const double nu = fid.order;
  switch (fid.kind) {
    case FunctionKind::BesselJ: {
      const BesselPair p = bessel_j_pair(nu, x);
      return {p.j, p.jp};
    }
    case FunctionKind::BesselY: {
      const BesselPair p = bessel_jy(nu, x);
      return {p.y, p.yp};
    }
    case FunctionKind::Cylinder: {
      const double alpha = fid.alpha.value_or(0.0);
      if (alpha == 0.0) {
        const BesselPair p = bessel_j_pair(nu, x);
        return {p.j, p.jp};
      }
      const BesselPair p = bessel_jy(nu, x);
      const double c = std::cos(alpha);
      const double s = std::sin(alpha);
      return {c * p.j - s * p.y, c * p.jp - s * p.yp};
    }
    case FunctionKind::BesselJPrime: {
      const BesselPair p = bessel_j_pair(nu, x);
      const double jpp = -p.jp / x - (1.0 - nu * nu / (x * x)) * p.j;
      return {p.jp, jpp};
    }
    case FunctionKind::Lommel: {
      const int m = fid.degree.value_or(0);
      return {lommel_eval(m, nu, x), lommel_eval_prime(m, nu, x)};
    }
    case FunctionKind::AssocLommel: {
      const int m = fid.degree.value_or(0);
      return {assoc_eval(m, nu, x), assoc_eval_prime(m, nu, x)};
    }
  }
  throw DomainError("unknown function kind");
}

ZeroList zeros(const FunctionId& fid, int K, double tol) {
  fid.validate();
  if (K < 0) throw DomainError("zero count must be non-negative");
  if (!(tol > 0.0)) throw DomainError("zero tolerance must be positive");
  const double nu = fid.order;
  ZeroList out;
  out.fid = fid;
  out.tolerance = tol;
  if (fid.kind == FunctionKind::Lommel || fid.kind == FunctionKind::AssocLommel) {
    const int m = fid.degree.value_or(0);
    ZeroList r = fid.kind == FunctionKind::Lommel ? lommel_roots(m, nu - 1.0, LommelKind::Plain)
                                                  : lommel_roots(m, nu, LommelKind::Associated);
    if (static_cast<int>(r.zeros.size()) > K) {
      r.zeros.resize(static_cast<std::size_t>(K));
      r.residuals.resize(static_cast<std::size_t>(K));
    }
    r.fid = fid;
    return r;
  }
  if (K == 0) return out;

  switch (fid.kind) {
    case FunctionKind::BesselJ:
      if (!(nu > -1.0)) throw DomainError("zeros of J_nu need nu > -1");
      out.method = "scan+newton";
      // Rayleigh's sum gives j_{nu,1} > 2 sqrt(nu+1); for nu > 0 also j_{nu,1} > nu.
      scan(out, family_function(fid), std::max(nu, 2.0 * std::sqrt(nu + 1.0)), K, tol);
      break;
    case FunctionKind::BesselJPrime:
      if (!(nu >= 0.0)) throw DomainError("zeros of J'_nu need nu >= 0");
      out.method = "scan+newton";
      scan(out, family_function(fid), nu > 0.0 ? nu : 1e-6, K, tol);
      break;
    case FunctionKind::BesselY:
      if (!(nu >= 0.0)) throw DomainError("zeros of Y_nu need nu >= 0");
      out.method = "scan+newton";
      scan(out, family_function(fid), std::max(nu, 1e-3), K, tol);
      break;
    case FunctionKind::Cylinder: {
      const double alpha = fid.alpha.value_or(0.0);
      if (alpha == 0.0) {
        ZeroList j = zeros(FunctionId::bessel_j(nu), K, tol);
        j.fid = fid;
        return j;
      }
      if (!(nu >= 0.0)) throw DomainError("zeros of C_nu^alpha with alpha > 0 need nu >= 0");
      out.method = "bracketed-by-j+newton";
      cylinder_between_j_zeros(out, alpha, nu, K, tol);
      break;
    }
    default:
      throw DomainError("unsupported function kind for zeros");
  }
  return out;
}

double zero(const FunctionId& fid, int k, double tol) {
  if (k < 1) throw DomainError("zero index must be >= 1");
  const ZeroList z = zeros(fid, k, tol);
  if (static_cast<int>(z.zeros.size()) < k) {
    throw DomainError("function has fewer than " + std::to_string(k) + " positive zeros");
  }
  return z.zeros.back();
}

double dj_dnu_series(double nu, double j, int* terms_used) {
  if (!(j > 0.0)) throw DomainError("dj_dnu_series needs a positive zero");
  const int top = static_cast<int>(std::ceil(nu + j + 15.0 * std::cbrt(j) + 60.0));
  std::vector<double> a(static_cast<std::size_t>(top) + 2, 0.0);
  a[static_cast<std::size_t>(top)] = 1.0;
  for (int n = top; n >= 1; --n) {
    const auto i = static_cast<std::size_t>(n);
    a[i - 1] = 2.0 * (nu + 1.0 + n) / j * a[i] - a[i + 1];
    if (std::fabs(a[i - 1]) > 1e200) {
      for (std::size_t r = i - 1; r < a.size(); ++r) a[r] *= 1e-200;
    }
  }
  if (a[0] == 0.0) throw ConvergenceError("Miller recurrence lost its normalisation");
  double sum = 0.0;
  int n = 0;
  for (; n <= top; ++n) {
    const double r = a[static_cast<std::size_t>(n)] / a[0];
    const double term = r * r;
    sum += term;
    if (term < 1e-14 * sum && n > nu + 20.0) break;
  }
  if (n > top) throw ConvergenceError("Ismail-Muldoon series did not settle below its tail bound");
  if (terms_used != nullptr) *terms_used = n + 1;
  return 2.0 / j * sum;
}

double dj_dnu_watson(double nu, double c) {
  if (!(c > 0.0)) throw DomainError("Watson integral needs a positive zero");
  // u = sinh t, then u = s^2 to soften the logarithmic endpoint.
  const double s_max = std::sqrt(24.0 / c);
  auto integrand = [c, nu](double s) {
    if (s <= 0.0) return 0.0;
    return 2.0 * s * watson_integrand(c, nu, s * s);
  };
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 0.0, s_max, 20, 1e-12, &error);
  if (!std::isfinite(value)) throw ConvergenceError("Watson quadrature failed");
  return 2.0 * c * value;
}

OrderDerivative dj_dnu(double nu, int k) {
  if (!(nu > 0.0)) throw DomainError("dj_dnu needs nu > 0");
  if (k < 1) throw DomainError("zero index must be >= 1");
  OrderDerivative out;
  out.nu = nu;
  out.k = k;
  out.zero = zero(FunctionId::bessel_j(nu), k);
  const double up = zero(FunctionId::bessel_j(nu + kOrderStep), k);
  const double down = zero(FunctionId::bessel_j(nu - kOrderStep), k);
  out.value_fd = (up - down) / (2.0 * kOrderStep);
  out.value_series = dj_dnu_series(nu, out.zero, &out.series_terms);
  out.value_watson = dj_dnu_watson(nu, out.zero);
  const double v[3] = {out.value_fd, out.value_series, out.value_watson};
  for (int i = 0; i < 3; ++i) {
    for (int l = i + 1; l < 3; ++l) {
      const double rel = std::fabs(v[i] - v[l]) / std::max(std::fabs(v[i]), std::fabs(v[l]));
      out.spread = std::max(out.spread, rel);
    }
  }
  return out;
}

MonotonicityVerdict cylinder_zero_monotonicity(double alpha, const std::vector<double>& nus,
                                               int k) {
  MonotonicityVerdict out;
  out.nus = nus;
  for (double nu : nus) out.zeros.push_back(zero(FunctionId::cylinder(alpha, nu), k));
  for (std::size_t i = 0; i + 1 < out.zeros.size(); ++i) {
    if (!(out.zeros[i] < out.zeros[i + 1]) || !(nus[i] < nus[i + 1])) {
      out.increasing = false;
      out.first_violation = i;
      break;
    }
  }
  return out;
}

}  // namespace lommelkit
