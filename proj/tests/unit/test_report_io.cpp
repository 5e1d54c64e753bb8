#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "doctest.h"
#include "lommelkit/lommelkit.hpp"

using namespace lommelkit;

namespace {

template <class T>
T round_trip(const T& value) {
  const std::string text = dump(json(value));
  return json::parse(text).get<T>();
}

}  // namespace

TEST_CASE("JSON round trips are lossless") {
  const ZeroList z = zeros(FunctionId::bessel_j(1.125), 7);
  CHECK(round_trip(z) == z);
  const ZeroList c = zeros(FunctionId::cylinder(0.3, 2.0), 4);
  CHECK(round_trip(c) == c);
  const ZeroList l = zeros(FunctionId::assoc_lommel(4, 1.5), 4);
  CHECK(round_trip(l) == l);
  const LommelCoefficients co = assoc_coefficients(7, 0.3);
  CHECK(round_trip(co) == co);
  const EtaRoot e = eta_limit(7);
  CHECK(round_trip(e) == e);

  InterlaceOptions opt;
  opt.keep_all_violations = true;
  const InterlaceReport plain = verify_plain_interlacing(Family::BesselJ, 4, 0.5, 12, 0.0, opt);
  CHECK(round_trip(plain) == plain);
  const double nu = solve_in_bracket(5, 5.619, 5.62).at(0).nu_star;
  const InterlaceReport gen = verify_generalized_interlacing(Family::BesselJ, 5, nu, 10);
  CHECK(round_trip(gen) == gen);
  const MergedZeros mz = merged_sequence(Family::Cylinder, 4, 1.0, 6, 2.0);
  CHECK(round_trip(mz) == mz);
  const CommonZeroSet cz = detect_common_zeros(Family::BesselJ, 5, nu, 12);
  CHECK(round_trip(cz) == cz);

  const WronskianSample w = wronskian_series(3, 0.5, 4.0, 200);
  CHECK(round_trip(w) == w);
  const NuStarSolution s = solve_nu_star(3, 1, 2, 3.0, 5.0);
  CHECK(round_trip(s) == s);
  const TrajectorySet t = trace_trajectories(4, 0.0, 1.0, 0.5, 2, 1);
  CHECK(round_trip(t.curves) == t.curves);
}

TEST_CASE("interlace report JSON carries the schema keys") {
  const json j = verify_generalized_interlacing(Family::BesselJ, 3, 1.125, 15);
  for (const char* key : {"family", "m", "nu", "pattern", "ok", "violations", "common_zeros"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["pattern"] == "generalized");
  CHECK(j["ok"] == true);
}

TEST_CASE("non-finite numbers become null and come back as NaN") {
  WronskianSample w;
  w.x = 1.0;
  w.direct = std::numeric_limits<double>::infinity();
  const json j = w;
  CHECK(j["direct"].is_null());
  CHECK(std::isnan(j.get<WronskianSample>().direct));
}

TEST_CASE("dumps are deterministic") {
  const auto a = dump(json(scan_nu_star(4, 2, 12.0, 0.0, 1)));
  const auto b = dump(json(scan_nu_star(4, 2, 12.0, 0.0, 4)));
  CHECK(a == b);
}

TEST_CASE("CSV tables") {
  CHECK(format_g15(2.404825557695773) == "2.40482555769577");
  CHECK(format_g15(1e-20) == "1e-20");
  CHECK(format_g15(std::numeric_limits<double>::quiet_NaN()) == "nan");

  std::ostringstream zs;
  write_csv(zs, zeros(FunctionId::bessel_j(0.0), 2));
  CHECK(zs.str().rfind("k,zero,residual\n1,2.40482555769577,", 0) == 0);

  std::ostringstream ts;
  write_csv(ts, trace_trajectories(4, 0.0, 0.5, 0.5, 1, 1).curves);
  std::istringstream lines(ts.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "curve_id,nu,x");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 3 * 2);

  std::ostringstream ns;
  write_csv(ns, std::vector<NuStarSolution>{solve_nu_star(3, 1, 2, 3.0, 5.0)});
  CHECK(ns.str().rfind("m,l,k,alpha,nu_star,", 0) == 0);
}
