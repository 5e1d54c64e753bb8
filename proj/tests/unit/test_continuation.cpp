#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "lommelkit/continuation.hpp"
#include "lommelkit/errors.hpp"
#include "lommelkit/interlace.hpp"
#include "lommelkit/lommel.hpp"
#include "lommelkit/special_eval.hpp"
#include "lommelkit/zeros.hpp"
#include "oracles.hpp"

using namespace lommelkit;
using oracle::mp;

TEST_CASE("the m = 5 crossing inside (5.619, 5.62)") {
  const auto sols = solve_in_bracket(5, 5.619, 5.62);
  REQUIRE(sols.size() == 1);
  const NuStarSolution& s = sols[0];
  CHECK(s.nu_star > 5.619);
  CHECK(s.nu_star < 5.62);
  CHECK(s.l == 2);
  CHECK(s.k == 6);
  CHECK(s.residual_j < 1e-8);
  CHECK(s.residual_jm < 1e-8);
  CHECK_FALSE(s.near_simple_rational);
  CHECK(std::fabs(d_of_nu(5, s.l, s.k, s.nu_star)) < 1e-10);
  // Independent check in 50 digits: x* is a zero of both J_{nu*} and J_{nu*+5}.
  CHECK(std::fabs(static_cast<double>(oracle::besselj(s.nu_star, s.x_star))) < 1e-12);
  CHECK(std::fabs(static_cast<double>(oracle::besselj(s.nu_star + 5, s.x_star))) < 1e-12);
  const NuStarSolution direct = solve_nu_star(5, 2, 6, 5.619, 5.62);
  CHECK(direct.nu_star == doctest::Approx(s.nu_star).epsilon(1e-12));
}

TEST_CASE("m = 3, l = 1, k = 2 on (3, 5)") {
  CHECK(d_of_nu(3, 1, 2, 3.0) < 0);
  CHECK(d_of_nu(3, 1, 2, 5.0) > 0);
  const NuStarSolution s = solve_nu_star(3, 1, 2, 3.0, 5.0);
  const double rho = 2 * std::sqrt((s.nu_star + 1) * (s.nu_star + 2));
  CHECK(rho == doctest::Approx(s.x_star).epsilon(1e-12));
  CHECK(std::fabs(s.x_star - oracle::besselj_zero(s.nu_star, 2)) < 1e-10);
  CHECK(s.residual_j < 1e-8);
  CHECK(s.residual_jm < 1e-8);
}

TEST_CASE("the first Bessel zero never meets the m = 3 root") {
  // rho_{2,nu,1} = 2 sqrt((nu+1)(nu+2)) stays above j_{nu,1} on all of (-1, 0].
  for (double nu = -0.999; nu <= 0.0; nu += 0.037) CHECK(d_of_nu(3, 1, 1, nu) > 0);
  CHECK_THROWS_AS(solve_nu_star(3, 1, 1, -1 + 1e-6, 0.0), DomainError);
  CHECK(scan_nu_star(3, 1, 0.0).empty());
}

TEST_CASE("scans") {
  const auto s4 = scan_nu_star(4, 3, 20.0);
  CHECK_FALSE(s4.empty());
  for (std::size_t i = 0; i < s4.size(); ++i) {
    CHECK(s4[i].residual_j < 1e-8);
    CHECK(s4[i].residual_jm < 1e-8);
    CHECK(d_of_nu(4, s4[i].l, s4[i].k, s4[i].nu_lo) * d_of_nu(4, s4[i].l, s4[i].k, s4[i].nu_hi) < 0);
    if (i > 0) CHECK(s4[i].nu_star >= s4[i - 1].nu_star);
  }
  CHECK(scan_nu_star(3, 0, 10.0).empty());
  const auto s5 = scan_nu_star(5, 6, 8.0, 0.0, 4);
  bool found = false;
  for (const NuStarSolution& s : s5) found |= s.nu_star > 5.619 && s.nu_star < 5.62;
  CHECK(found);
  CHECK(scan_nu_star(5, 6, 8.0, 0.0, 1) == s5);
}

TEST_CASE("cylinder crossings") {
  const auto sols = scan_nu_star(3, 3, 12.0, std::numbers::pi / 4);
  REQUIRE_FALSE(sols.empty());
  const NuStarSolution& s = sols.front();
  CHECK(s.l == 1);
  const NuStarSolution again = cylinder_nu_star(std::numbers::pi / 4, 3, s.l, s.k, s.nu_lo, s.nu_hi);
  CHECK(again == s);
  CHECK(again.residual_j < 1e-8);
  CHECK(again.residual_jm < 1e-8);
  CHECK(std::fabs(cylinder(std::numbers::pi / 4, s.nu_star + 3, s.x_star).value) < 1e-8);
  CHECK_THROWS_AS(cylinder_nu_star(0.0, 3, 1, 2, 3.0, 5.0), DomainError);
  CHECK(solve_nu_star(3, 1, 2, 3.0, 5.0).nu_star == solve_in_bracket(3, 3.0, 5.0, 0.0).at(0).nu_star);
}

TEST_CASE("solutions fed back into the interlacing checks") {
  for (const NuStarSolution& s : scan_nu_star(4, 3, 20.0)) {
    const InterlaceReport r = verify_generalized_interlacing(Family::BesselJ, 4, s.nu_star, 15);
    CHECK(r.ok);
    CHECK(r.common_zeros.size() >= 1);
    const auto base = zeros(FunctionId::bessel_j(s.nu_star), 25).zeros;
    const auto partner = zeros(FunctionId::bessel_j(s.nu_star + 4), 25).zeros;
    const Sandwich w = remark_sandwich(s.x_star, base, partner);
    CHECK(w.common);
    CHECK(w.ok);
  }
}

TEST_CASE("rational orders keep the Lommel factor away from zero at Bessel zeros") {
  for (int q = 1; q <= 8; ++q) {
    for (int p = -q + 1; p <= 4 * q; p += 3) {
      const double nu = static_cast<double>(p) / q;
      const auto js = zeros(FunctionId::bessel_j(nu), 20).zeros;
      for (int m = 3; m <= 6; ++m) {
        double least = INFINITY;
        for (double j : js) least = std::min(least, std::fabs(lommel_eval(m - 1, nu + 1, j)));
        CAPTURE(nu);
        CAPTURE(m);
        CHECK(least > 1e-8);
      }
    }
  }
}

TEST_CASE("trajectories") {
  const TrajectorySet t = trace_trajectories(5, -0.5, 12.0, 0.25, 6, 2, 4);
  CHECK(t.curves.size() == 6 + 6 + 2);
  for (const Trajectory& c : t.curves) {
    CAPTURE(c.curve_id);
    for (std::size_t i = 1; i < c.samples.size(); ++i) {
      CHECK(c.samples[i].x > c.samples[i - 1].x);
      // Consecutive samples move by less than 2 * step * 5.
      CHECK(c.samples[i].x - c.samples[i - 1].x < 2 * 0.25 * 5);
    }
  }
  REQUIRE_FALSE(t.crossings.empty());
  bool fig = false;
  for (const NuStarSolution& s : t.crossings) {
    CHECK(s.residual_j < 1e-8);
    CHECK(s.residual_jm < 1e-8);
    CHECK(std::fabs(s.x_star - zero(FunctionId::bessel_j(s.nu_star), s.k)) < 1e-8);
    fig |= s.l == 2 && s.k == 6;
  }
  CHECK(fig);
  CHECK(trace_trajectories(5, -0.5, 12.0, 0.25, 6, 2, 1).curves == t.curves);
}

TEST_CASE("the rho curves of R_{4,nu+1} climb faster than nu at large order") {
  const TrajectorySet t = trace_trajectories(5, 500.0, 501.0, 0.5, 1, 2);
  for (const Trajectory& c : t.curves) {
    if (c.curve_id.rfind("rho_", 0) != 0) continue;
    const double slope = (c.samples.back().x - c.samples.front().x) / (c.samples.back().nu - c.samples.front().nu);
    CHECK(slope > 1.0);
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(solve_nu_star(2, 1, 1, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(solve_nu_star(5, 3, 1, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(solve_nu_star(5, 1, 1, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(trace_trajectories(5, 0.0, 1.0, 0.0, 2, 2), DomainError);
  CHECK_THROWS_AS(trace_trajectories(5, -1.5, 1.0, 0.5, 2, 2), DomainError);
}
