// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "lommelkit/lommelkit.hpp"

using namespace lommelkit;

namespace {

const std::vector<double> kNuGrid{-0.5, 0.0, 1.125, 2.7, 5.0};

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

std::string fmt(double v) { return format_g15(v); }

Outcome ac1() {
  Outcome o;
  double least = INFINITY;
  for (double nu : kNuGrid) {
    for (int m : {1, 2}) {
      const InterlaceReport r = verify_plain_interlacing(Family::BesselJ, m, nu, 20);
      least = std::min(least, r.min_gap);
      if (!r.ok || r.base_zeros.size() < 20 || r.min_gap <= 1e-8) {
        fail(o, "nu=" + fmt(nu) + " m=" + std::to_string(m) + " does not alternate");
      }
    }
  }
  if (o.pass) o.detail = "10 cases, min gap " + fmt(least);
  return o;
}

Outcome ac2() {
  Outcome o;
  std::string idx;
  for (double nu : kNuGrid) {
    const InterlaceReport plain = verify_plain_interlacing(Family::BesselJ, 3, nu, 15);
    const InterlaceReport gen = verify_generalized_interlacing(Family::BesselJ, 3, nu, 15);
    if (plain.ok || !plain.first_violation || *plain.first_violation >= 15) {
      fail(o, "plain interlacing did not break for nu=" + fmt(nu));
    }
    if (!gen.ok) fail(o, "generalized interlacing failed for nu=" + fmt(nu));
    if (plain.first_violation) idx += (idx.empty() ? "" : ",") + std::to_string(*plain.first_violation);
  }
  if (o.pass) o.detail = "plain violation indices " + idx + "; generalized ok";
  return o;
}

Outcome ac3() {
  Outcome o;
  const double nu = 1.125;
  const double rho_closed = 2 * std::sqrt(2.125 * 3.125);
  const auto roots = lommel_roots(2, nu, LommelKind::Plain).zeros;
  if (roots.size() != 1 || std::fabs(roots[0] - rho_closed) > 1e-8) fail(o, "Lommel root off its closed form");
  const auto base = zeros(FunctionId::bessel_j(nu), 20).zeros;
  std::size_t s = 0;
  while (s < base.size() && base[s] < rho_closed) ++s;
  if (s == 0 || s == base.size() || !(base[s - 1] + 1e-8 < rho_closed && rho_closed < base[s] - 1e-8)) {
    fail(o, "rho is not strictly between consecutive zeros");
  }
  InterlaceOptions opt;
  opt.gap_margin = 1e-8;
  const InterlaceReport r = verify_generalized_interlacing(Family::BesselJ, 3, nu, 15, 0.0, opt);
  if (!r.ok || r.merged.size() < 15) fail(o, "generalized pattern fails over 15 merged entries");
  if (o.pass) {
    o.detail = "rho=" + fmt(rho_closed) + " in (" + fmt(base[s - 1]) + ", " + fmt(base[s]) + "), " +
               std::to_string(r.merged.size()) + " merged entries ok";
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run({"common-zero", "--m", "5", "--bracket", "5.619", "5.62"}, out, err);
  if (code != 0) {
    fail(o, "common-zero exited with " + std::to_string(code) + ": " + err.str());
    return o;
  }
  const auto j = nlohmann::json::parse(out.str());
  if (j.size() != 1) {
    fail(o, "expected one solution, got " + std::to_string(j.size()));
    return o;
  }
  const double nu = j[0]["nu_star"].get<double>();
  const double rj = j[0]["residual_j"].get<double>();
  const double rjm = j[0]["residual_jm"].get<double>();
  if (!(nu > 5.619 && nu < 5.62)) fail(o, "nu* outside (5.619, 5.62)");
  if (!(rj < 1e-8 && rjm < 1e-8)) fail(o, "residuals too large");
  const CommonZeroSet cz = detect_common_zeros(Family::BesselJ, 5, nu, 20);
  if (cz.points.size() != 1) fail(o, "expected exactly one common zero, found " + std::to_string(cz.points.size()));
  const InterlaceReport r = verify_generalized_interlacing(Family::BesselJ, 5, nu, 15);
  if (!r.ok) fail(o, "generalized interlacing fails at nu*");
  if (!cz.points.empty()) {
    const auto base = zeros(FunctionId::bessel_j(nu), 25).zeros;
    const auto partner = zeros(FunctionId::bessel_j(nu + 5), 25).zeros;
    const Sandwich s = remark_sandwich(cz.points[0].x, base, partner);
    if (!s.common || !s.ok) fail(o, "common-zero sandwich does not hold");
    if (o.pass) {
      o.detail = "nu*=" + fmt(nu) + " (l=" + std::to_string(j[0]["l"].get<int>()) +
                 ", k=" + std::to_string(j[0]["k"].get<int>()) + "), x*=" + fmt(cz.points[0].x) +
                 ", residuals " + fmt(rj) + "/" + fmt(rjm) + ", sandwich " + fmt(s.lower_partner) +
                 " < " + fmt(s.lower_base) + " < x* < " + fmt(s.upper_base) + " < " + fmt(s.upper_partner);
    }
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> pick_m(1, 5);
  std::uniform_real_distribution<double> pick_nu(-0.9, 6.0);
  std::uniform_real_distribution<double> pick_x(0.5, 20.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int m = pick_m(rng);
    const double nu = pick_nu(rng);
    const double x = pick_x(rng);
    const WronskianSample w = wronskian_series(m, nu, x, 5000);
    const double allowed = w.tail_bound + 1e-9 * std::max(1.0, std::fabs(w.direct));
    const double gap = std::fabs(w.direct - w.series);
    worst = std::max(worst, gap / allowed);
    if (!(gap <= allowed)) {
      fail(o, "m=" + std::to_string(m) + " nu=" + fmt(nu) + " x=" + fmt(x) + " gap " + fmt(gap) +
                  " > " + fmt(allowed));
    }
  }
  if (o.pass) o.detail = "50 samples, worst gap/allowance " + fmt(worst);
  return o;
}

Outcome ac6() {
  Outcome o;
  double worst = 0.0;
  for (double nu : {0.5, 1.0, 2.7, 5.0}) {
    for (int k = 1; k <= 3; ++k) {
      const OrderDerivative d = dj_dnu(nu, k);
      worst = std::max(worst, d.spread);
      if (!(d.value_fd > 0 && d.value_series > 0 && d.value_watson > 0)) {
        fail(o, "non-positive value at nu=" + fmt(nu) + " k=" + std::to_string(k));
      }
      if (!(d.spread <= 1e-4)) fail(o, "spread " + fmt(d.spread) + " at nu=" + fmt(nu) + " k=" + std::to_string(k));
    }
  }
  if (o.pass) o.detail = "12 cases, worst relative spread " + fmt(worst);
  return o;
}

Outcome ac7() {
  Outcome o;
  const std::vector<std::vector<double>> expected{
      {2.0}, {std::sqrt(2.0)}, {std::sqrt(5.0) - 1, std::sqrt(5.0) + 1}};
  for (int n = 2; n <= 4; ++n) {
    const EtaRoot e = eta_limit(n);
    const auto& want = expected[n - 2];
    if (e.roots.size() != want.size()) {
      fail(o, "wrong root count for n=" + std::to_string(n));
      continue;
    }
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (!(std::fabs(e.roots[i] - want[i]) <= 1e-12)) fail(o, "eta off for n=" + std::to_string(n));
    }
  }
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const EtaRoot e = eta_limit(n);
    const auto hi = lommel_roots(n, 1e4 + 1, LommelKind::Plain).zeros;
    const auto lo = lommel_roots(n, 1e4 - 1, LommelKind::Plain).zeros;
    if (hi.size() != e.roots.size() || lo.size() != e.roots.size()) {
      fail(o, "root count mismatch at n=" + std::to_string(n));
      continue;
    }
    for (std::size_t l = 0; l < hi.size(); ++l) {
      const double diff = std::fabs((hi[l] - lo[l]) / 2 - e.roots[l]);
      worst = std::max(worst, diff);
      if (!(diff < 1e-2)) fail(o, "slope mismatch n=" + std::to_string(n) + " l=" + std::to_string(l + 1));
    }
  }
  if (o.pass) o.detail = "eta exact to 1e-12; worst slope difference at nu=1e4 (n<=8) " + fmt(worst);
  return o;
}

Outcome ac8() {
  Outcome o;
  std::vector<double> nus;
  for (int q = 1; q <= 8; ++q) {
    for (int p = -q + 1; p <= 4 * q; ++p) {
      if (std::gcd(std::abs(p), q) == 1) nus.push_back(static_cast<double>(p) / q);
    }
  }
  const auto sizes = parallel_map(nus.size(), 4, [&](std::size_t i) {
    std::vector<std::size_t> out;
    for (int m = 1; m <= 6; ++m) out.push_back(detect_common_zeros(Family::BesselJ, m, nus[i], 20).points.size());
    return out;
  });
  for (std::size_t i = 0; i < nus.size(); ++i) {
    for (int m = 1; m <= 6; ++m) {
      if (sizes[i][m - 1] != 0) fail(o, "common zero reported at rational nu=" + fmt(nus[i]) + " m=" + std::to_string(m));
    }
  }
  // The cardinality bound, checked where common zeros do occur.
  int irrational_checked = 0;
  for (int m = 3; m <= 6; ++m) {
    for (const NuStarSolution& s : scan_nu_star(m, 6, 12.0, 0.0, 4)) {
      const auto n = detect_common_zeros(Family::BesselJ, m, s.nu_star, 20).points.size();
      if (n < 1 || static_cast<int>(n) > (m - 1) / 2) fail(o, "|N| out of bounds at nu*=" + fmt(s.nu_star));
      ++irrational_checked;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(nus.size()) + " rational orders x m<=6 empty; bound holds at " +
               std::to_string(irrational_checked) + " nu* values";
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  int cases = 0;
  for (double alpha : {0.0, std::numbers::pi / 4, std::numbers::pi / 2, 3 * std::numbers::pi / 4}) {
    for (double nu : {0.5, 1.125, 3.0}) {
      for (int m = 1; m <= 5; ++m) {
        const std::string tag = "alpha=" + fmt(alpha) + " nu=" + fmt(nu) + " m=" + std::to_string(m);
        if (!verify_generalized_interlacing(Family::Cylinder, m, nu, 15, alpha).ok) fail(o, "pattern fails " + tag);
        const CylinderLowRegion low = cylinder_low_region(alpha, m, nu);
        if (!low.alternates || !low.count_ok) fail(o, "M = N - 1 structure fails " + tag);
        if (!low.sign_claims) fail(o, "sign claims fail " + tag);
        ++cases;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome ac10() {
  Outcome o;
  for (int m : {0, 1}) {
    for (double nu : {0.5, 1.0, 2.7}) {
      if (!verify_plain_interlacing(Family::Derivative, m, nu, 15).ok) {
        fail(o, "corollary fails m=" + std::to_string(m) + " nu=" + fmt(nu));
      }
    }
  }
  std::string shown;
  for (double nu : {0.5, 1.0, 2.7}) {
    const double rho = std::sqrt(2 * nu * (nu + 1));
    if (verify_plain_interlacing(Family::Derivative, 2, nu, 15).ok) fail(o, "m=2 plain interlacing did not break, nu=" + fmt(nu));
    const auto base = zeros(FunctionId::bessel_j_prime(nu), 20).zeros;
    const auto partner = zeros(FunctionId::bessel_j(nu + 2), 20).zeros;
    const Sandwich s = remark_sandwich(rho, base, partner);
    if (!s.ok || s.common) fail(o, "breakdown sandwich missing at nu=" + fmt(nu));
    if (nu == 1.0) {
      shown = fmt(s.lower_partner) + " < " + fmt(s.lower_base) + " < rho*=" + fmt(rho) + " < " +
              fmt(s.upper_base) + " < " + fmt(s.upper_partner);
    }
  }
  for (int m = 2; m <= 5; ++m) {
    for (double nu : {0.5, 1.0, 2.7}) {
      if (!verify_generalized_interlacing(Family::Derivative, m, nu, 15).ok) {
        fail(o, "generalized pattern fails m=" + std::to_string(m) + " nu=" + fmt(nu));
      }
    }
  }
  if (o.pass) o.detail = "corollary ok; nu=1 sandwich " + shown;
  return o;
}

Outcome ac11() {
  Outcome o;
  const std::vector<double> nus{0.5, 1.125, 2.7, 5.619, 10.0};
  std::vector<double> xs;
  for (double x = 0.5; x <= 50.0; x += 0.5) xs.push_back(x);
  double worst_rec = 0, worst_lw = 0, worst_alw = 0, worst_refl = 0, worst_pf = 0, worst_w = 0;
  for (double nu : nus) {
    for (double x : xs) {
      for (int m = 0; m <= 8; ++m) {
        const double scale = lommel_coefficients(m + 1, nu).term_magnitude(x) +
                             2 * (nu + m) / x * lommel_coefficients(m, nu).term_magnitude(x) + 1.0;
        const double r = lommel_eval(m - 1, nu, x) + lommel_eval(m + 1, nu, x) - 2 * (nu + m) / x * lommel_eval(m, nu, x);
        worst_rec = std::max(worst_rec, std::fabs(r) / scale);
        const double g = assoc_eval(m, nu, x);
        const double g_reflected = (m % 2 ? -1.0 : 1.0) * assoc_eval(-m, -nu, x);
        worst_refl = std::max(worst_refl, std::fabs(g - g_reflected) / (assoc_coefficients(m, nu).term_magnitude(x) + 1.0));
        if (m >= 1) {
          const WronskianResidual w = lommel_wronskian_identity(m, nu, x);
          worst_lw = std::max(worst_lw, w.plain);
          worst_alw = std::max(worst_alw, w.assoc);
        }
      }
    }
  }
  for (double nu : {0.0, 0.5, 1.125, 2.7}) {
    for (double x : {0.5, 1.0, 3.0, 7.0}) {
      const PartialFractionCheck p = partial_fraction_check(nu, x, 5000);
      worst_pf = std::max({worst_pf, p.residual, p.coefficient_residual});
    }
  }
  for (double x : xs) {
    const double nu = -0.5;
    const double w = bessel_j(nu, x).value * bessel_j_prime(-nu, x).value -
                     bessel_j_prime(nu, x).value * bessel_j(-nu, x).value;
    const double closed = -2 * std::sin(nu * std::numbers::pi) / (std::numbers::pi * x);
    worst_w = std::max(worst_w, std::fabs(w - closed));
  }
  const struct {
    const char* name;
    double value;
  } parts[] = {{"recurrence", worst_rec},   {"Lommel Wronskian", worst_lw},
               {"associated Wronskian", worst_alw}, {"associated reflection", worst_refl},
               {"partial fractions", worst_pf},    {"W[J_nu,J_-nu]", worst_w}};
  for (const auto& p : parts) {
    if (!(p.value <= 1e-9)) fail(o, std::string(p.name) + " residual " + fmt(p.value));
    o.detail += (o.pass ? std::string(o.detail.empty() ? "" : ", ") + p.name + " " + fmt(p.value) : "");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 classical interlacing m in {1,2}", ac1},
      {"AC2 plain breaks, generalized holds at m=3", ac2},
      {"AC3 nu=1.125, m=3 merged pattern", ac3},
      {"AC4 common zero at nu* in (5.619, 5.62)", ac4},
      {"AC5 Wronskian direct vs zero series", ac5},
      {"AC6 dj/dnu by three routes", ac6},
      {"AC7 eta limits and large-order slopes", ac7},
      {"AC8 no common zeros at rational orders", ac8},
      {"AC9 cylinder functions", ac9},
      {"AC10 derivative family", ac10},
      {"AC11 identity suite", ac11},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
