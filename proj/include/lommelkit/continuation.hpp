#pragma once

#include <string>
#include <vector>

// Orders nu* at which a Lommel root rho_{m-1,nu,l} (zero of R_{m-1,nu+1})
// meets a zero j_{nu,k} of J_nu, so that J_nu and J_{nu+m} share a zero.
// Everything is driven by d(nu) = rho_{m-1,nu,l} - j_{nu,k} (or c_{nu,k}).

namespace lommelkit {

struct NuStarSolution {
  int m = 0;
  int l = 0;
  int k = 0;
  double alpha = 0.0;
  double nu_star = 0.0;
  double x_star = 0.0;
  double residual_j = 0.0;   // |C_{nu*}(x*)|
  double residual_jm = 0.0;  // |C_{nu*+m}(x*)|
  double nu_lo = 0.0;
  double nu_hi = 0.0;
  int iterations = 0;
  // nu* is irrational by the Siegel-Shidlovskii argument; this only records
  // whether it happens to sit within 1e-9 of p/q with q <= 64.
  bool near_simple_rational = false;
  bool operator==(const NuStarSolution&) const = default;
};

/// d(nu) = rho_{m-1,nu,l} - c_{nu,k} for C^alpha (alpha = 0 is J).
double d_of_nu(int m, int l, int k, double nu, double alpha = 0.0);

/// Root of d on [nu_lo, nu_hi]; throws DomainError when d has no sign change there.
NuStarSolution solve_nu_star(int m, int l, int k, double nu_lo, double nu_hi);
NuStarSolution cylinder_nu_star(double alpha, int m, int l, int k, double nu_lo, double nu_hi);

/// Every (l, k) whose d changes sign across [nu_lo, nu_hi], solved.
std::vector<NuStarSolution> solve_in_bracket(int m, double nu_lo, double nu_hi,
                                             double alpha = 0.0);

/// Sign changes of d over the grid -7/8, -6/8, ... <= nu_max (from 1/8 for
/// alpha > 0), for l <= floor((m-1)/2) and k <= k_max; sorted by nu*. Empty for k_max < 1.
std::vector<NuStarSolution> scan_nu_star(int m, int k_max, double nu_max, double alpha = 0.0,
                                         unsigned jobs = 1);

struct TrajectorySample {
  double nu = 0.0;
  double x = 0.0;
  bool operator==(const TrajectorySample&) const = default;
};

/// curve_id is "j_<k>" for j_{nu,k}, "jm_<k>" for j_{nu+m,k}, "rho_<l>" for rho_{m-1,nu,l}.
struct Trajectory {
  int m = 0;
  std::string curve_id;
  std::vector<TrajectorySample> samples;
  bool operator==(const Trajectory&) const = default;
};

struct TrajectorySet {
  std::vector<Trajectory> curves;
  std::vector<NuStarSolution> crossings;  // rho_l meeting j_k between two samples
};

/// Samples on nu_from, nu_from + step, ... <= nu_to. Zeros are matched to the
/// previous sample by nearest neighbour; a jump over half the local spacing
/// aborts with ConvergenceError.
TrajectorySet trace_trajectories(int m, double nu_from, double nu_to, double step, int k_max,
                                 int l_max, unsigned jobs = 1);

}  // namespace lommelkit
