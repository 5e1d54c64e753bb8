#include "lommelkit/lommel.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "lommelkit/errors.hpp"

namespace lommelkit {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("Lommel polynomials are evaluated at x > 0, got " + std::to_string(x));
  }
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// (a)(a+1)...(a+n-1)
double rising(double a, int n) {
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= a + i;
  return p;
}

double power_half(double x, int p) { return std::pow(0.5 * x, p); }

double polish_root(const LommelCoefficients& c, double x) {
  for (int it = 0; it < 50; ++it) {
    const double f = c.eval(x);
    const double fp = c.eval_prime(x);
    if (fp == 0.0 || !std::isfinite(fp)) break;
    const double step = f / fp;
    const double next = x - step;
    if (!(next > 0.0)) break;
    x = next;
    if (std::fabs(step) <= 4.0 * kEps * x) break;
  }
  return x;
}

}  // namespace

const char* to_string(LommelKind kind) {
  return kind == LommelKind::Plain ? "Plain" : "Associated";
}

LommelKind lommel_kind_from_string(const std::string& name) {
  if (name == "Plain") return LommelKind::Plain;
  if (name == "Associated") return LommelKind::Associated;
  throw DomainError("unknown Lommel kind '" + name + "'");
}

double LommelCoefficients::eval(double x) const {
  check_x(x);
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    s += coeffs[k] * power_half(x, 2 * static_cast<int>(k) - m);
  }
  return s;
}

double LommelCoefficients::eval_prime(double x) const {
  check_x(x);
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const int p = 2 * static_cast<int>(k) - m;
    s += coeffs[k] * p * power_half(x, p) / x;
  }
  return s;
}

double LommelCoefficients::term_magnitude(double x) const {
  check_x(x);
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    s += std::fabs(coeffs[k] * power_half(x, 2 * static_cast<int>(k) - m));
  }
  return s;
}

LommelCoefficients lommel_coefficients(int m, double nu) {
  if (m < 0) throw DomainError("coefficient form needs m >= 0");
  LommelCoefficients out{m, nu, LommelKind::Plain, {}};
  for (int k = 0; k <= m / 2; ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    out.coeffs.push_back(sign * binomial(m - k, k) * rising(nu + k, m - 2 * k));
  }
  return out;
}

LommelCoefficients assoc_coefficients(int m, double nu) {
  if (m < 0) throw DomainError("coefficient form needs m >= 0");
  LommelCoefficients out{m, nu, LommelKind::Associated, {}};
  if (m == 0) {
    out.coeffs = {1.0};
    return out;
  }
  if (m == 1) {
    out.coeffs = {0.5 * nu};  // nu/x = (nu/2) (x/2)^{-1}
    return out;
  }
  const LommelCoefficients a = lommel_coefficients(m, nu);
  const LommelCoefficients b = lommel_coefficients(m - 2, nu + 2.0);
  for (int k = 0; k <= m / 2; ++k) {
    const double lower = k >= 1 ? b.coeffs[static_cast<std::size_t>(k - 1)] : 0.0;
    out.coeffs.push_back(0.5 * (a.coeffs[static_cast<std::size_t>(k)] - lower));
  }
  return out;
}

double lommel_eval(int m, double nu, double x) {
  check_x(x);
  if (m >= 0) return lommel_coefficients(m, nu).eval(x);
  if (m == -1) return 0.0;
  const int n = -m;
  return -lommel_eval(n - 2, nu - n + 1.0, x);
}

double lommel_eval_prime(int m, double nu, double x) {
  check_x(x);
  if (m >= 0) return lommel_coefficients(m, nu).eval_prime(x);
  if (m == -1) return 0.0;
  const int n = -m;
  return -lommel_eval_prime(n - 2, nu - n + 1.0, x);
}

double lommel_eval_recurrence(int m, double nu, double x) {
  check_x(x);
  if (m < -1) throw DomainError("recurrence route needs m >= -1");
  double prev = 0.0;
  double cur = 1.0;
  if (m == -1) return prev;
  for (int k = 0; k < m; ++k) {
    const double next = 2.0 * (nu + k) / x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double assoc_eval(int m, double nu, double x) {
  check_x(x);
  if (m >= 0) return assoc_coefficients(m, nu).eval(x);
  return 0.5 * (lommel_eval(m, nu, x) - lommel_eval(m - 2, nu + 2.0, x));
}

double assoc_eval_prime(int m, double nu, double x) {
  check_x(x);
  if (m >= 0) return assoc_coefficients(m, nu).eval_prime(x);
  return 0.5 * (lommel_eval_prime(m, nu, x) - lommel_eval_prime(m - 2, nu + 2.0, x));
}

ZeroList lommel_roots(int n, double lambda, LommelKind kind) {
  if (n < 0) throw DomainError("Lommel root degree must be >= 0");
  if (!std::isfinite(lambda)) throw DomainError("Lommel root order must be finite");
  double nu = 0.0;
  ZeroList out;
  out.tolerance = 1e-12;
  out.method = "jacobi-eigen+newton";
  LommelCoefficients poly;
  if (kind == LommelKind::Plain) {
    if (!(lambda > -1.0)) throw DomainError("Lommel roots of R_{n,lambda+1} need lambda > -1");
    nu = lambda + 1.0;
    out.fid = FunctionId::lommel(n, nu);
    poly = lommel_coefficients(n, nu);
  } else {
    if (!(lambda > 0.0)) throw DomainError("associated Lommel roots need lambda > 0");
    nu = lambda;
    out.fid = FunctionId::assoc_lommel(n, nu);
    poly = assoc_coefficients(n, nu);
  }
  if (n < 2) return out;

  // Monic form in t = 1/x: p_{j+1} = t p_j - beta_j p_{j-1}.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int j = 1; j < n; ++j) {
    double beta = 1.0 / (4.0 * (nu + j) * (nu + j - 1.0));
    if (kind == LommelKind::Associated && j == 1) beta = 1.0 / (2.0 * nu * (nu + 1.0));
    sub(j - 1) = std::sqrt(beta);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("tridiagonal eigenvalue solve failed for Lommel degree " +
                           std::to_string(n));
  }
  const Eigen::VectorXd& t = solver.eigenvalues();
  const double t_scale = t.cwiseAbs().maxCoeff();
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) {
    if (t(i) > 1e-10 * t_scale) xs.push_back(1.0 / t(i));
  }
  std::sort(xs.begin(), xs.end());

  for (double x0 : xs) {
    const double x = polish_root(poly, x0);
    const double h = 1e-6 * (1.0 + x);
    if (x - h <= 0.0) continue;
    const double lo = poly.eval(x - h);
    const double hi = poly.eval(x + h);
    if (!(lo * hi < 0.0)) continue;
    out.zeros.push_back(x);
    out.residuals.push_back(std::fabs(poly.eval(x)) / poly.term_magnitude(x));
  }
  return out;
}

WronskianResidual lommel_wronskian_identity(int m, double nu, double x) {
  check_x(x);
  if (m < 1) throw DomainError("Lommel Wronskian identity needs m >= 1");
  WronskianResidual out;
  {
    const double f = lommel_eval(m - 2, nu + 1.0, x);
    const double fp = lommel_eval_prime(m - 2, nu + 1.0, x);
    const double g = lommel_eval(m - 1, nu + 1.0, x);
    const double gp = lommel_eval_prime(m - 1, nu + 1.0, x);
    const double w = f * gp - fp * g;
    double s = 0.0;
    for (int k = 0; k <= m - 2; ++k) {
      const double r = lommel_eval(k, nu + 1.0, x);
      s += (nu + k + 1.0) * r * r;
    }
    const double rhs = -2.0 / (x * x) * s;
    const double scale = std::max({std::fabs(f * gp), std::fabs(fp * g), std::fabs(rhs), 1e-300});
    out.plain = std::fabs(w - rhs) / scale;
  }
  {
    const double f = assoc_eval(m + 1, nu, x);
    const double fp = assoc_eval_prime(m + 1, nu, x);
    const double g = assoc_eval(m, nu, x);
    const double gp = assoc_eval_prime(m, nu, x);
    const double w = f * gp - fp * g;
    double s = 0.0;
    double abs_s = 0.0;
    for (int k = 1; k <= m; ++k) {
      const double r = assoc_eval(k, nu, x);
      s += (nu + k) * r * r;
      abs_s += std::fabs(nu + k) * r * r;
    }
    const double rhs = 2.0 / (x * x) * s + nu / (x * x);
    const double scale = std::max({std::fabs(f * gp), std::fabs(fp * g),
                                   2.0 / (x * x) * abs_s + std::fabs(nu) / (x * x), 1e-300});
    out.assoc = std::fabs(w - rhs) / scale;
  }
  return out;
}

EtaRoot eta_limit(int n) {
  if (n < 2) throw DomainError("eta_limit needs n >= 2");
  const double a = 0.5 * (1.0 - n);
  const double b = -0.5 * n;
  const double c = -static_cast<double>(n);
  const int degree = n / 2;
  std::vector<long double> coef(static_cast<std::size_t>(degree) + 1);
  coef[0] = 1.0L;
  for (int k = 0; k < degree; ++k) {
    coef[static_cast<std::size_t>(k) + 1] =
        coef[static_cast<std::size_t>(k)] * (a + k) * (b + k) / ((c + k) * (k + 1.0L));
  }

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  const double lead = static_cast<double>(coef[static_cast<std::size_t>(degree)]);
  for (int i = 0; i < degree; ++i) {
    companion(0, i) = -static_cast<double>(coef[static_cast<std::size_t>(degree - 1 - i)]) / lead;
    if (i + 1 < degree) companion(i + 1, i) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("companion eigenvalue solve failed");

  auto poly = [&](long double z, long double& dp, long double& mag) {
    long double p = 0.0L;
    dp = 0.0L;
    mag = 0.0L;
    for (int k = degree; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + coef[static_cast<std::size_t>(k)];
      mag += std::fabs(coef[static_cast<std::size_t>(k)] * std::pow(z, k));
    }
    return p;
  };

  EtaRoot out;
  out.n = n;
  for (int i = 0; i < degree; ++i) {
    const std::complex<double> ev = solver.eigenvalues()(i);
    if (std::fabs(ev.imag()) > 1e-8 * std::abs(ev) || ev.real() <= 0.0) continue;
    long double z = ev.real();
    long double dp = 0.0L;
    long double mag = 0.0L;
    for (int it = 0; it < 60; ++it) {
      const long double p = poly(z, dp, mag);
      if (dp == 0.0L) break;
      const long double step = p / dp;
      z -= step;
      if (std::fabs(step) <= 1e-18L * std::fabs(z)) break;
    }
    const long double p = poly(z, dp, mag);
    out.roots.push_back(static_cast<double>(std::sqrt(z)));
    out.residuals.push_back(static_cast<double>(std::fabs(p) / mag));
  }
  std::vector<std::size_t> order(out.roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return out.roots[l] < out.roots[r]; });
  EtaRoot sorted{n, {}, {}};
  for (std::size_t i : order) {
    sorted.roots.push_back(out.roots[i]);
    sorted.residuals.push_back(out.residuals[i]);
  }
  return sorted;
}

double pochhammer_limit(int m) {
  if (m < 0) throw DomainError("pochhammer_limit needs m >= 0");
  if (m % 2 == 0) {
    return rising(-0.5 * (m + 1), m / 2) / rising(-static_cast<double>(m), m / 2);
  }
  return rising(-0.5 * m, (m - 1) / 2) / rising(-static_cast<double>(m), (m - 1) / 2);
}

}  // namespace lommelkit
