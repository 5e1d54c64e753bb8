#include "lommelkit/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "lommelkit/errors.hpp"
#include "lommelkit/function_id.hpp"
#include "lommelkit/lommel.hpp"
#include "lommelkit/parallel.hpp"
#include "lommelkit/special_eval.hpp"
#include "lommelkit/zeros.hpp"

namespace lommelkit {

namespace {

constexpr double kNuTol = 1e-12;
constexpr int kMaxIterations = 200;

FunctionId base_fid(double alpha, double nu) {
  return alpha == 0.0 ? FunctionId::bessel_j(nu) : FunctionId::cylinder(alpha, nu);
}

void check_args(double alpha, int m, int l, int k) {
  if (m < 3) throw DomainError("a Lommel root rho_{m-1,nu,l} needs m >= 3");
  if (l < 1 || l > (m - 1) / 2) {
    throw DomainError("l must lie in 1..floor((m-1)/2)");
  }
  if (k < 1) throw DomainError("k must be >= 1");
  if (!(alpha >= 0.0 && alpha < std::numbers::pi)) throw DomainError("alpha must lie in [0, pi)");
}

void check_order(double alpha, double nu) {
  if (!std::isfinite(nu) || nu <= -1.0) throw DomainError("order must exceed -1");
  if (alpha != 0.0 && nu <= 0.0) throw DomainError("cylinder functions need nu > 0 here");
}

bool near_simple_rational(double v) {
  for (int q = 1; q <= 64; ++q) {
    const double p = std::round(v * q);
    if (std::fabs(v - p / q) < 1e-9) return true;
  }
  return false;
}

NuStarSolution solve(double alpha, int m, int l, int k, double lo, double hi) {
  check_args(alpha, m, l, k);
  if (!(lo < hi)) throw DomainError("bracket must satisfy nu_lo < nu_hi");
  check_order(alpha, lo);

  double a = lo;
  double b = hi;
  double fa = d_of_nu(m, l, k, a, alpha);
  double fb = d_of_nu(m, l, k, b, alpha);
  if (fa == 0.0) b = a, fb = fa;
  if (fb == 0.0) a = b, fa = fb;
  if (fa * fb > 0.0) {
    std::ostringstream os;
    os.precision(15);
    os << "d(nu) = rho_{" << m - 1 << ",nu," << l << "} - zero_" << k
       << " has no sign change on [" << lo << ", " << hi << "]: d(lo) = " << fa
       << ", d(hi) = " << fb;
    throw DomainError(os.str());
  }

  // Illinois regula falsi: bracketing kept, with the stale end halved.
  int iterations = 0;
  int side = 0;
  double c = a;
  while (b - a > kNuTol * std::max(1.0, std::fabs(a)) && fa != 0.0 && fb != 0.0) {
    if (++iterations > kMaxIterations) {
      throw ConvergenceError("nu* iteration did not converge in bracket [" + std::to_string(a) +
                             ", " + std::to_string(b) + "]");
    }
    c = (a * fb - b * fa) / (fb - fa);
    if (!(c > a && c < b)) c = 0.5 * (a + b);
    const double fc = d_of_nu(m, l, k, c, alpha);
    if (fc == 0.0) {
      a = b = c;
      break;
    }
    if ((fc < 0.0) == (fa < 0.0)) {
      a = c;
      fa = fc;
      if (side == -1) fb *= 0.5;
      side = -1;
    } else {
      b = c;
      fb = fc;
      if (side == 1) fa *= 0.5;
      side = 1;
    }
  }
  double nu = fa == 0.0 ? a : fb == 0.0 ? b : 0.5 * (a + b);

  NuStarSolution out;
  out.m = m;
  out.l = l;
  out.k = k;
  out.alpha = alpha;
  out.nu_star = nu;
  out.nu_lo = lo;
  out.nu_hi = hi;
  out.iterations = iterations;
  out.x_star = zero(base_fid(alpha, nu), k);
  out.residual_j = std::fabs(alpha == 0.0 ? bessel_j(nu, out.x_star).value
                                          : cylinder(alpha, nu, out.x_star).value);
  out.residual_jm = std::fabs(alpha == 0.0 ? bessel_j(nu + m, out.x_star).value
                                           : cylinder(alpha, nu + m, out.x_star).value);
  out.near_simple_rational = near_simple_rational(nu);
  return out;
}

// d values at one grid order for every (l, k): row-major [l-1][k-1].
std::vector<double> d_row(double alpha, int m, int k_max, double nu) {
  const auto rho = lommel_roots(m - 1, nu, LommelKind::Plain).zeros;
  const auto base = zeros(base_fid(alpha, nu), k_max).zeros;
  std::vector<double> row;
  row.reserve(rho.size() * base.size());
  for (double r : rho) {
    for (double z : base) row.push_back(r - z);
  }
  return row;
}

std::vector<double> grid(double from, double to, double step) {
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double v = from + i * step;
    if (v > to + 1e-12 * std::max(1.0, std::fabs(to))) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace

double d_of_nu(int m, int l, int k, double nu, double alpha) {
  check_args(alpha, m, l, k);
  check_order(alpha, nu);
  const auto rho = lommel_roots(m - 1, nu, LommelKind::Plain);
  return rho.zeros.at(static_cast<std::size_t>(l - 1)) - zero(base_fid(alpha, nu), k);
}

NuStarSolution solve_nu_star(int m, int l, int k, double nu_lo, double nu_hi) {
  return solve(0.0, m, l, k, nu_lo, nu_hi);
}

NuStarSolution cylinder_nu_star(double alpha, int m, int l, int k, double nu_lo, double nu_hi) {
  if (!(alpha > 0.0)) throw DomainError("cylinder_nu_star needs alpha in (0, pi)");
  return solve(alpha, m, l, k, nu_lo, nu_hi);
}

std::vector<NuStarSolution> solve_in_bracket(int m, double nu_lo, double nu_hi, double alpha) {
  check_args(alpha, m, 1, 1);
  if (!(nu_lo < nu_hi)) throw DomainError("bracket must satisfy nu_lo < nu_hi");
  check_order(alpha, nu_lo);
  const int L = (m - 1) / 2;
  const auto rho_lo = lommel_roots(m - 1, nu_lo, LommelKind::Plain).zeros;
  const auto rho_hi = lommel_roots(m - 1, nu_hi, LommelKind::Plain).zeros;
  const double reach = std::max(rho_lo.back(), rho_hi.back());
  // Enough base zeros at both ends to cover every root.
  auto cover = [&](double nu) {
    int K = 4;
    for (;;) {
      auto z = zeros(base_fid(alpha, nu), K).zeros;
      if (z.back() > reach) return z;
      K *= 2;
    }
  };
  const auto z_lo = cover(nu_lo);
  const auto z_hi = cover(nu_hi);
  std::vector<NuStarSolution> out;
  for (int l = 1; l <= L; ++l) {
    const std::size_t n = std::min(z_lo.size(), z_hi.size());
    for (std::size_t i = 0; i < n; ++i) {
      const double a = rho_lo[l - 1] - z_lo[i];
      const double b = rho_hi[l - 1] - z_hi[i];
      if (a * b <= 0.0) out.push_back(solve(alpha, m, l, static_cast<int>(i) + 1, nu_lo, nu_hi));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const NuStarSolution& a, const NuStarSolution& b) { return a.nu_star < b.nu_star; });
  return out;
}

std::vector<NuStarSolution> scan_nu_star(int m, int k_max, double nu_max, double alpha,
                                         unsigned jobs) {
  check_args(alpha, m, 1, 1);
  if (k_max < 1) return {};
  const double start = alpha == 0.0 ? -0.875 : 0.125;
  const auto nus = grid(start, nu_max, 0.125);
  if (nus.size() < 2) return {};
  const auto rows = parallel_map(nus.size(), jobs,
                                 [&](std::size_t i) { return d_row(alpha, m, k_max, nus[i]); });
  const int L = (m - 1) / 2;

  struct Task {
    int l, k;
    double lo, hi;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i + 1 < nus.size(); ++i) {
    for (int l = 1; l <= L; ++l) {
      for (int k = 1; k <= k_max; ++k) {
        const std::size_t at = static_cast<std::size_t>((l - 1) * k_max + (k - 1));
        const double a = rows[i][at];
        const double b = rows[i + 1][at];
        // A zero sitting exactly on a grid point is picked up once, by the interval to its right.
        if ((a <= 0.0 && b > 0.0) || (a >= 0.0 && b < 0.0)) {
          tasks.push_back({l, k, nus[i], nus[i + 1]});
        }
      }
    }
  }
  auto out = parallel_map(tasks.size(), jobs, [&](std::size_t i) {
    return solve(alpha, m, tasks[i].l, tasks[i].k, tasks[i].lo, tasks[i].hi);
  });
  std::stable_sort(out.begin(), out.end(), [](const NuStarSolution& a, const NuStarSolution& b) {
    return a.nu_star < b.nu_star;
  });
  return out;
}

TrajectorySet trace_trajectories(int m, double nu_from, double nu_to, double step, int k_max,
                                 int l_max, unsigned jobs) {
  check_args(0.0, m, 1, std::max(k_max, 1));
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  if (!(step > 0.0)) throw DomainError("step must be positive");
  if (!(nu_from <= nu_to)) throw DomainError("nu_from must not exceed nu_to");
  check_order(0.0, nu_from);
  const int L = std::clamp(l_max, 0, (m - 1) / 2);
  const auto nus = grid(nu_from, nu_to, step);

  struct Snapshot {
    std::vector<double> j, jm, rho;
  };
  const auto snaps = parallel_map(nus.size(), jobs, [&](std::size_t i) {
    Snapshot s;
    s.j = zeros(FunctionId::bessel_j(nus[i]), k_max + 1).zeros;
    s.jm = zeros(FunctionId::bessel_j(nus[i] + m), k_max + 1).zeros;
    s.rho = lommel_roots(m - 1, nus[i], LommelKind::Plain).zeros;
    return s;
  });

  // Each tracked value must stay nearest to its own index at the next order.
  auto guard = [&](const std::vector<double>& prev, const std::vector<double>& next,
                   std::size_t count, const char* name, std::size_t step_index) {
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t best = 0;
      for (std::size_t c = 1; c < next.size(); ++c) {
        if (std::fabs(next[c] - prev[idx]) < std::fabs(next[best] - prev[idx])) best = c;
      }
      double spacing = 0.0;
      if (next.size() > 1) {
        const std::size_t lo = idx == 0 ? 0 : idx - 1;
        const std::size_t hi = std::min(idx + 1, next.size() - 1);
        spacing = (next[hi] - next[lo]) / static_cast<double>(hi - lo);
      } else {
        spacing = next[0];
      }
      if (best != idx && std::fabs(next[idx] - prev[idx]) > 0.5 * spacing) {
        std::ostringstream os;
        os.precision(15);
        os << "curve " << name << "_" << idx + 1 << " jumped from " << prev[idx] << " to "
           << next[idx] << " between nu = " << nus[step_index] << " and "
           << nus[step_index + 1] << " (local spacing " << spacing << ")";
        throw ConvergenceError(os.str());
      }
    }
  };
  for (std::size_t i = 0; i + 1 < snaps.size(); ++i) {
    guard(snaps[i].j, snaps[i + 1].j, static_cast<std::size_t>(k_max), "j", i);
    guard(snaps[i].jm, snaps[i + 1].jm, static_cast<std::size_t>(k_max), "jm", i);
    if (L > 0) guard(snaps[i].rho, snaps[i + 1].rho, static_cast<std::size_t>(L), "rho", i);
  }

  TrajectorySet out;
  auto add_curve = [&](const std::string& id, auto pick) {
    Trajectory t;
    t.m = m;
    t.curve_id = id;
    for (std::size_t i = 0; i < nus.size(); ++i) t.samples.push_back({nus[i], pick(snaps[i])});
    out.curves.push_back(std::move(t));
  };
  for (int k = 1; k <= k_max; ++k) {
    add_curve("j_" + std::to_string(k), [k](const Snapshot& s) { return s.j[k - 1]; });
  }
  for (int k = 1; k <= k_max; ++k) {
    add_curve("jm_" + std::to_string(k), [k](const Snapshot& s) { return s.jm[k - 1]; });
  }
  for (int l = 1; l <= L; ++l) {
    add_curve("rho_" + std::to_string(l), [l](const Snapshot& s) { return s.rho[l - 1]; });
  }

  struct Task {
    int l, k;
    double lo, hi;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i + 1 < snaps.size(); ++i) {
    for (int l = 1; l <= L; ++l) {
      for (int k = 1; k <= k_max; ++k) {
        const double a = snaps[i].rho[l - 1] - snaps[i].j[k - 1];
        const double b = snaps[i + 1].rho[l - 1] - snaps[i + 1].j[k - 1];
        if ((a <= 0.0 && b > 0.0) || (a >= 0.0 && b < 0.0)) tasks.push_back({l, k, nus[i], nus[i + 1]});
      }
    }
  }
  out.crossings = parallel_map(tasks.size(), jobs, [&](std::size_t i) {
    return solve(0.0, m, tasks[i].l, tasks[i].k, tasks[i].lo, tasks[i].hi);
  });
  std::stable_sort(out.crossings.begin(), out.crossings.end(),
                   [](const NuStarSolution& a, const NuStarSolution& b) {
                     return a.nu_star < b.nu_star;
                   });
  return out;
}

}  // namespace lommelkit
