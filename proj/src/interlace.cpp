#include "lommelkit/interlace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "lommelkit/errors.hpp"
#include "lommelkit/lommel.hpp"
#include "lommelkit/special_eval.hpp"
#include "lommelkit/zeros.hpp"

namespace lommelkit {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularWindow = 1e-6;
constexpr double kNearCoincidence = 1e-4;
// Zeros of J_mu and C_mu are eventually spaced by pi; 1.1/pi bounds their density.
constexpr double kZeroDensity = 1.1 / kPi;

FunctionId base_id(Family family, double nu, double alpha) {
  switch (family) {
    case Family::BesselJ: return FunctionId::bessel_j(nu);
    case Family::Cylinder: return FunctionId::cylinder(alpha, nu);
    case Family::Derivative: return FunctionId::bessel_j_prime(nu);
  }
  throw DomainError("unknown family");
}

FunctionId partner_id(Family family, int m, double nu, double alpha) {
  if (family == Family::Cylinder) return FunctionId::cylinder(alpha, nu + m);
  return FunctionId::bessel_j(nu + m);
}

void check_family_domain(Family family, int m, double nu) {
  switch (family) {
    case Family::BesselJ:
      if (m < 1) throw DomainError("BesselJ family needs m >= 1");
      if (!(nu > -1.0)) throw DomainError("BesselJ family needs nu > -1");
      break;
    case Family::Cylinder:
      if (m < 1) throw DomainError("Cylinder family needs m >= 1");
      if (!(nu > 0.0)) throw DomainError("Cylinder family needs nu > 0");
      break;
    case Family::Derivative:
      if (m < 0) throw DomainError("Derivative family needs m >= 0");
      if (!(nu > 0.0)) throw DomainError("Derivative family needs nu > 0");
      break;
  }
}

std::vector<CommonZeroPoint> common_points(Family family, int m, double nu, double alpha,
                                           const std::vector<double>& base, double tol) {
  const FunctionId low = base_id(family, nu, alpha);
  const FunctionId high = partner_id(family, m, nu, alpha);
  std::vector<CommonZeroPoint> out;
  for (double x : base) {
    const FunctionValue h = evaluate(high, x);
    if (std::fabs(h.f) < tol * std::max(1.0, std::fabs(h.fp))) {
      out.push_back({x, std::fabs(evaluate(low, x).f), std::fabs(h.f)});
    }
  }
  return out;
}

bool contains_relative(const std::vector<double>& values, double x, double rel_tol) {
  return std::any_of(values.begin(), values.end(),
                     [&](double v) { return std::fabs(v - x) <= rel_tol * std::fabs(x); });
}

// Base zeros reaching past `limit`, the common ones removed, cut to those below
// `limit` plus one more.
std::vector<double> base_window(Family family, int m, double nu, double alpha, double limit,
                                int start_count, const InterlaceOptions& options,
                                std::vector<double>& skipped) {
  int count = std::max(start_count, 4);
  std::vector<double> base = base_zeros(family, nu, count, alpha, options.zero_tol);
  while (base.back() <= limit) {
    count += std::max(8, count / 2);
    base = base_zeros(family, nu, count, alpha, options.zero_tol);
  }
  const std::vector<CommonZeroPoint> common =
      common_points(family, m, nu, alpha, base, options.common_tol);
  std::vector<double> common_x;
  for (const CommonZeroPoint& p : common) common_x.push_back(p.x);
  std::vector<double> kept;
  skipped.clear();
  for (double b : base) {
    if (contains_relative(common_x, b, 0.0)) {
      if (b <= limit) skipped.push_back(b);
      continue;
    }
    kept.push_back(b);
    if (b > limit) break;
  }
  return kept;
}

}  // namespace

const char* to_string(Family family) {
  switch (family) {
    case Family::BesselJ: return "BesselJ";
    case Family::Cylinder: return "Cylinder";
    case Family::Derivative: return "Derivative";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  if (name == "j" || name == "BesselJ") return Family::BesselJ;
  if (name == "c" || name == "Cylinder") return Family::Cylinder;
  if (name == "jp" || name == "Derivative") return Family::Derivative;
  throw DomainError("unknown family '" + name + "' (expected j, c or jp)");
}

const char* to_string(ZeroSource source) {
  switch (source) {
    case ZeroSource::HigherOrderZero: return "HigherOrderZero";
    case ZeroSource::LommelRoot: return "LommelRoot";
    case ZeroSource::CommonZero: return "CommonZero";
  }
  return "unknown";
}

ZeroSource zero_source_from_string(const std::string& name) {
  if (name == "HigherOrderZero") return ZeroSource::HigherOrderZero;
  if (name == "LommelRoot") return ZeroSource::LommelRoot;
  if (name == "CommonZero") return ZeroSource::CommonZero;
  throw DomainError("unknown zero source '" + name + "'");
}

int common_zero_bound(Family family, int m) {
  if (family == Family::Derivative) return m / 2;
  return (m - 1) / 2;
}

std::vector<double> base_zeros(Family family, double nu, int K, double alpha, double zero_tol) {
  return zeros(base_id(family, nu, alpha), K, zero_tol).zeros;
}

std::vector<double> partner_zeros(Family family, int m, double nu, int K, double alpha,
                                  double zero_tol) {
  return zeros(partner_id(family, m, nu, alpha), K, zero_tol).zeros;
}

std::vector<double> lommel_partner_roots(Family family, int m, double nu) {
  if (family == Family::Derivative) return lommel_roots(m, nu, LommelKind::Associated).zeros;
  return lommel_roots(m - 1, nu, LommelKind::Plain).zeros;
}

CommonZeroSet detect_common_zeros(Family family, int m, double nu, int K, double alpha,
                                  const InterlaceOptions& options) {
  check_family_domain(family, m, nu);
  CommonZeroSet out{family, m, nu, alpha, {}, options.common_tol};
  if (K <= 0) return out;
  out.points = common_points(family, m, nu, alpha, base_zeros(family, nu, K, alpha, options.zero_tol),
                             options.common_tol);
  return out;
}

MergedZeros merged_sequence(Family family, int m, double nu, int K, double alpha,
                            const InterlaceOptions& options) {
  check_family_domain(family, m, nu);
  MergedZeros out;
  out.m = m;
  out.nu = nu;
  out.alpha = alpha;
  out.family = family;
  if (K <= 0) return out;
  const std::vector<double> high = partner_zeros(family, m, nu, K, alpha, options.zero_tol);
  for (double h : high) out.entries.push_back({h, ZeroSource::HigherOrderZero});
  for (double r : lommel_partner_roots(family, m, nu)) {
    auto nearest = std::min_element(out.entries.begin(), out.entries.end(),
                                    [r](const MergedEntry& a, const MergedEntry& b) {
                                      return std::fabs(a.value - r) < std::fabs(b.value - r);
                                    });
    const double rel = std::fabs(nearest->value - r) / r;
    if (rel <= options.dedup_tol) {
      nearest->source = ZeroSource::CommonZero;
      continue;
    }
    if (rel < kNearCoincidence) {
      std::ostringstream os;
      os.precision(15);
      os << "Lommel root " << r << " lies within relative " << rel << " of partner zero "
         << nearest->value << " without being merged";
      out.warnings.push_back(os.str());
    }
    if (r <= high.back()) out.entries.push_back({r, ZeroSource::LommelRoot});
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const MergedEntry& a, const MergedEntry& b) { return a.value < b.value; });
  return out;
}

std::optional<std::size_t> first_alternation_violation(const std::vector<double>& base,
                                                       const std::vector<double>& other,
                                                       double margin, double* min_gap,
                                                       std::vector<std::size_t>* all) {
  std::optional<std::size_t> first;
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < other.size(); ++i) {
    bool bad = i + 1 >= base.size();
    if (!bad) {
      const double g = std::min(other[i] - base[i], base[i + 1] - other[i]);
      gap = std::min(gap, g);
      bad = !(g > margin);
    }
    if (bad) {
      if (!first) first = i;
      if (all == nullptr) break;
      all->push_back(i);
    }
  }
  if (min_gap != nullptr) *min_gap = gap;
  return first;
}

InterlaceReport verify_generalized_interlacing(Family family, int m, double nu, int K,
                                               double alpha, const InterlaceOptions& options) {
  check_family_domain(family, m, nu);
  if (K < 3) throw DomainError("interlacing needs at least 3 partner zeros (K >= 3)");
  InterlaceReport report;
  report.family = family;
  report.m = m;
  report.nu = nu;
  report.alpha = alpha;
  const MergedZeros merged = merged_sequence(family, m, nu, K, alpha, options);
  report.merged = merged.entries;
  bool only_partner = true;
  std::vector<double> w;
  for (const MergedEntry& e : merged.entries) {
    w.push_back(e.value);
    if (e.source == ZeroSource::CommonZero) report.common_zeros.push_back(e.value);
    if (e.source != ZeroSource::HigherOrderZero) only_partner = false;
  }
  report.base_zeros = base_window(family, m, nu, alpha, w.back(), K + m + 4, options,
                                  report.skipped_base_zeros);
  if (!report.skipped_base_zeros.empty()) only_partner = false;
  report.pattern = only_partner ? "classical" : "generalized";
  report.first_violation =
      first_alternation_violation(report.base_zeros, w, options.gap_margin, &report.min_gap,
                                  options.keep_all_violations ? &report.violations : nullptr);
  report.ok = !report.first_violation.has_value();
  return report;
}

InterlaceReport verify_plain_interlacing(Family family, int m, double nu, int K, double alpha,
                                         const InterlaceOptions& options) {
  check_family_domain(family, m, nu);
  if (K < 3) throw DomainError("interlacing needs at least 3 partner zeros (K >= 3)");
  InterlaceReport report;
  report.family = family;
  report.m = m;
  report.nu = nu;
  report.alpha = alpha;
  report.pattern = "plain";
  const std::vector<double> high = partner_zeros(family, m, nu, K, alpha, options.zero_tol);
  for (double h : high) report.merged.push_back({h, ZeroSource::HigherOrderZero});
  int count = K + m + 4;
  std::vector<double> base = base_zeros(family, nu, count, alpha, options.zero_tol);
  while (base.back() <= high.back()) {
    count += std::max(8, count / 2);
    base = base_zeros(family, nu, count, alpha, options.zero_tol);
  }
  for (double b : base) {
    report.base_zeros.push_back(b);
    if (b > high.back()) break;
  }
  report.first_violation =
      first_alternation_violation(report.base_zeros, high, options.gap_margin, &report.min_gap,
                                  options.keep_all_violations ? &report.violations : nullptr);
  report.ok = !report.first_violation.has_value();
  return report;
}

Sandwich remark_sandwich(double center, const std::vector<double>& base,
                         const std::vector<double>& partner, double rel_tol) {
  Sandwich out;
  out.center = center;
  auto at = [](const std::vector<double>& v, int one_based) {
    if (one_based <= 0) return 0.0;
    if (one_based > static_cast<int>(v.size())) return std::numeric_limits<double>::infinity();
    return v[static_cast<std::size_t>(one_based - 1)];
  };
  int common_k = 0;
  for (std::size_t i = 0; i < partner.size(); ++i) {
    if (std::fabs(partner[i] - center) <= rel_tol * center) common_k = static_cast<int>(i) + 1;
  }
  out.common = common_k > 0;
  if (out.common) {
    int s = 0;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (std::fabs(base[i] - center) <= rel_tol * center) s = static_cast<int>(i) + 1;
    }
    if (s == 0 || s + 1 > static_cast<int>(base.size())) return out;
    out.s = s;
    out.k = common_k;
    out.lower_partner = at(partner, common_k - 1);
    out.lower_base = at(base, s - 1);
    out.upper_base = at(base, s + 1);
    out.upper_partner = at(partner, common_k + 1);
    out.ok = out.lower_partner < out.lower_base && out.lower_base < center &&
             center < out.upper_base && out.upper_base < out.upper_partner;
    return out;
  }
  const int s = static_cast<int>(std::count_if(base.begin(), base.end(),
                                               [center](double b) { return b < center; }));
  if (s == 0 || s + 1 > static_cast<int>(base.size())) return out;
  out.s = s;
  out.lower_base = at(base, s);
  out.upper_base = at(base, s + 1);
  out.k = static_cast<int>(std::count_if(partner.begin(), partner.end(),
                                         [&](double h) { return h < out.lower_base; }));
  out.lower_partner = at(partner, out.k);
  out.upper_partner = at(partner, out.k + 1);
  out.ok = out.lower_partner < out.lower_base && out.lower_base < center &&
           center < out.upper_base && out.upper_base < out.upper_partner;
  return out;
}

bool no_consecutive_common_zeros(int m, double nu, int K, const InterlaceOptions& options) {
  check_family_domain(Family::BesselJ, m, nu);
  const std::vector<double> base = base_zeros(Family::BesselJ, nu, K, 0.0, options.zero_tol);
  const std::vector<CommonZeroPoint> common =
      common_points(Family::BesselJ, m, nu, 0.0, base, options.common_tol);
  std::vector<bool> flagged(base.size(), false);
  for (const CommonZeroPoint& p : common) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (base[i] == p.x) flagged[i] = true;
    }
  }
  for (std::size_t i = 0; i + 1 < flagged.size(); ++i) {
    if (flagged[i] && flagged[i + 1]) return false;
  }
  return true;
}

CylinderLowRegion cylinder_low_region(double alpha, int m, double nu) {
  check_family_domain(Family::Cylinder, m, nu);
  CylinderLowRegion out;
  out.upper = zero(FunctionId::cylinder(alpha, nu + m), 1);
  int count = m + 3;
  std::vector<double> base = base_zeros(Family::Cylinder, nu, count, alpha);
  while (base.back() < out.upper) {
    count *= 2;
    base = base_zeros(Family::Cylinder, nu, count, alpha);
  }
  for (double c : base) {
    if (c < out.upper) out.base_zeros.push_back(c);
  }
  for (double r : lommel_roots(m - 1, nu, LommelKind::Plain).zeros) {
    if (r < out.upper) out.roots.push_back(r);
  }
  out.count_ok = out.roots.size() + 1 == out.base_zeros.size();
  out.alternates = out.count_ok && !first_alternation_violation(out.base_zeros, out.roots, 0.0);
  out.sign_claims = true;
  for (std::size_t k = 0; k < out.base_zeros.size(); ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;  // (-1)^{k+1}, k 1-based
    if (!(sign * lommel_eval(m - 1, nu + 1.0, out.base_zeros[k]) > 0.0)) out.sign_claims = false;
  }
  const FunctionId c_nu = FunctionId::cylinder(alpha, nu);
  for (std::size_t l = 0; l < out.roots.size(); ++l) {
    const double sign = l % 2 == 0 ? -1.0 : 1.0;  // (-1)^l, l 1-based
    if (!(sign * evaluate(c_nu, out.roots[l]).f > 0.0)) out.sign_claims = false;
  }
  return out;
}

WronskianPositivity cylinder_wronskian_positivity(double alpha, int m, double nu, double x_max,
                                                  int samples) {
  check_family_domain(Family::Cylinder, m, nu);
  if (samples < 1) throw DomainError("need at least one sample");
  const double start = zero(FunctionId::cylinder(alpha, nu + m - 1), 1);
  if (!(x_max > start)) throw DomainError("x_max must exceed the first zero of C_{nu+m-1}");
  const FunctionId f = FunctionId::cylinder(alpha, nu + m - 1);
  const FunctionId g = FunctionId::cylinder(alpha, nu + m);
  WronskianPositivity out;
  out.min_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double x = start + (x_max - start) * (i + 0.5) / samples;
    const FunctionValue a = evaluate(f, x);
    const FunctionValue b = evaluate(g, x);
    const double v = x * (a.f * b.fp - a.fp * b.f);
    if (v < out.min_value) {
      out.min_value = v;
      out.at_x = x;
    }
  }
  out.ok = out.min_value > 0.0;
  return out;
}

namespace {

// sum_k J_mu(x)^2 (x^2 + j_k^2) / (x^2 - j_k^2)^2, using J_mu(x)/(x - j) ~ J' - J'' (x - j)/2
// next to a zero.
double weighted_zero_sum(double mu, double x, const std::vector<double>& jz, bool& near) {
  const BesselPair p = bessel_j_pair(mu, x);
  const double jpp = -p.jp / x - (1.0 - mu * mu / (x * x)) * p.j;
  double sum = 0.0;
  near = false;
  for (double j : jz) {
    const double d = x - j;
    const double s = x + j;
    if (std::fabs(d) < kSingularWindow * j) {
      near = true;
      const double q = p.jp - 0.5 * jpp * d;
      sum += q * q * (x * x + j * j) / (s * s);
    } else {
      const double den = d * s;
      sum += p.j * p.j * (x * x + j * j) / (den * den);
    }
  }
  return sum;
}

double zero_sum_tail(double x, double j_last) {
  if (!(j_last > x)) return std::numeric_limits<double>::infinity();
  return kZeroDensity * j_last / ((j_last - x) * (j_last + x));
}

}  // namespace

WronskianSample wronskian_series(int m, double nu, double x, int N) {
  if (m < 1) throw DomainError("wronskian_series needs m >= 1");
  if (!(nu > -1.0)) throw DomainError("wronskian_series needs nu > -1");
  if (!(x > 0.0)) throw DomainError("wronskian_series needs x > 0");
  if (N < 1) throw DomainError("wronskian_series needs N >= 1");
  const double mu = nu + m;
  const std::vector<double> jz = zeros(FunctionId::bessel_j(mu), N).zeros;
  if (!(jz.back() > x)) throw DomainError("truncation N too small: x lies beyond the last zero used");
  const BesselPair jn = bessel_j_pair(nu, x);
  const BesselPair jm = bessel_j_pair(mu, x);
  const double r = lommel_eval(m - 1, nu + 1.0, x);
  const double rp = lommel_eval_prime(m - 1, nu + 1.0, x);

  WronskianSample out;
  out.x = x;
  out.truncation = N;
  out.direct = jn.j * (rp * jm.j + r * jm.jp) - jn.jp * r * jm.j;
  double finite = 0.0;
  for (int k = 0; k <= m - 1; ++k) {
    const double rk = lommel_eval(k, nu + 1.0, x);
    finite += (nu + k + 1.0) * rk * rk;
  }
  finite /= x * x;
  const double s = weighted_zero_sum(mu, x, jz, out.near_singularity);
  out.series = 2.0 * (r * r * s + jm.j * jm.j * finite);
  out.tail_bound = 2.0 * r * r * jm.j * jm.j * zero_sum_tail(x, jz.back());
  return out;
}

WronskianSample derivative_wronskian_series(int m, double nu, double x, int N) {
  if (m < 0) throw DomainError("derivative_wronskian_series needs m >= 0");
  if (!(nu > 0.0 || (nu == 0.0 && m >= 2))) {
    throw DomainError("derivative_wronskian_series needs nu > 0, or nu = 0 with m >= 2");
  }
  if (!(x > 0.0)) throw DomainError("derivative_wronskian_series needs x > 0");
  if (N < 1) throw DomainError("derivative_wronskian_series needs N >= 1");
  const double mu = nu + m;
  const std::vector<double> jz = zeros(FunctionId::bessel_j(mu), N).zeros;
  if (!(jz.back() > x)) throw DomainError("truncation N too small: x lies beyond the last zero used");
  const BesselPair jn = bessel_j_pair(nu, x);
  const double jnpp = -jn.jp / x - (1.0 - nu * nu / (x * x)) * jn.j;
  const BesselPair jm = bessel_j_pair(mu, x);
  const double r = assoc_eval(m, nu, x);
  const double rp = assoc_eval_prime(m, nu, x);

  WronskianSample out;
  out.x = x;
  out.truncation = N;
  out.direct = jn.jp * (rp * jm.j + r * jm.jp) - jnpp * r * jm.j;
  double finite = 0.0;
  for (int k = 1; k <= m; ++k) {
    const double rk = assoc_eval(k, nu, x);
    finite += (nu + k) * rk * rk;
  }
  finite = finite / (x * x) + nu / (2.0 * x * x);
  const double s = weighted_zero_sum(mu, x, jz, out.near_singularity);
  out.series = 2.0 * (r * r * s + jm.j * jm.j * finite);
  out.tail_bound = 2.0 * r * r * jm.j * jm.j * zero_sum_tail(x, jz.back());
  return out;
}

PartialFractionCheck partial_fraction_check(double nu, double x, int N) {
  if (!(nu > -1.0)) throw DomainError("partial_fraction_check needs nu > -1");
  if (!(x > 0.0)) throw DomainError("partial_fraction_check needs x > 0");
  if (N < 1) throw DomainError("partial_fraction_check needs N >= 1");
  const std::vector<double> jz = zeros(FunctionId::bessel_j(nu + 1.0), N).zeros;
  if (!(jz.back() > x)) throw DomainError("truncation N too small: x lies beyond the last zero used");
  PartialFractionCheck out;
  out.lhs = bessel_j_scaled(nu, x).value / bessel_j_scaled(nu + 1.0, x).value;
  double sum = 0.0;
  for (double j : jz) {
    if (std::fabs(x - j) < kSingularWindow * j) out.near_pole = true;
    const double coef = bessel_j_scaled(nu, j).value / (j * bessel_j_scaled_prime(nu + 1.0, j).value);
    out.coefficient_residual =
        std::max(out.coefficient_residual, std::fabs(2.0 * (nu + 1.0) * coef - 1.0));
    sum += coef * 2.0 * x * x / ((x - j) * (x + j));
  }
  out.truncated = 1.0 + sum;
  out.raw_residual = std::fabs(out.lhs - out.truncated);
  const double j_last = jz.back();
  const double c = x * x / (nu + 1.0);
  out.raw_tail_bound = c * kZeroDensity * std::log1p(2.0 * x / (j_last - x)) / (2.0 * x);
  const double a = j_last + 0.5 * kPi;
  out.tail_estimate = -c / kPi * std::log1p(2.0 * x / (a - x)) / (2.0 * x);
  out.residual = std::fabs(out.lhs - out.truncated - out.tail_estimate);
  return out;
}

}  // namespace lommelkit
