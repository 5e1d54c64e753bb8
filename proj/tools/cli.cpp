#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lommelkit/continuation.hpp"
#include "lommelkit/errors.hpp"
#include "lommelkit/interlace.hpp"
#include "lommelkit/lommel.hpp"
#include "lommelkit/report_io.hpp"
#include "lommelkit/zeros.hpp"

namespace lommelkit::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format = "json";
  std::string out_path;
  double zero_tol = kDefaultZeroTolerance;
  double common_tol = 1e-8;
  double dedup_tol = 1e-7;
  unsigned jobs = 1;
  bool verbose = false;
};

// Residual contract for a reported common zero.
constexpr double kCommonResidual = 1e-8;

struct Output {
  std::string text;
  int code = 0;
};

bool is_csv(const RunConfig& cfg) { return cfg.format == "csv"; }

InterlaceOptions options_from(const RunConfig& cfg) {
  InterlaceOptions o;
  o.zero_tol = cfg.zero_tol;
  o.common_tol = cfg.common_tol;
  o.dedup_tol = cfg.dedup_tol;
  o.keep_all_violations = cfg.verbose;
  return o;
}

struct ZerosArgs {
  std::string kind;
  double nu = 0.0;
  std::optional<double> alpha;
  int count = 0;
};

Output cmd_zeros(const RunConfig& cfg, const ZerosArgs& a) {
  FunctionId fid;
  if (a.kind == "j") {
    fid = FunctionId::bessel_j(a.nu);
  } else if (a.kind == "y") {
    fid = FunctionId::bessel_y(a.nu);
  } else if (a.kind == "jp") {
    fid = FunctionId::bessel_j_prime(a.nu);
  } else {
    if (!a.alpha) throw UsageError("--alpha is required for --kind c");
    fid = FunctionId::cylinder(*a.alpha, a.nu);
  }
  if (a.kind != "c" && a.alpha) throw UsageError("--alpha only applies to --kind c");
  const ZeroList list = zeros(fid, a.count, cfg.zero_tol);
  std::ostringstream os;
  if (is_csv(cfg)) {
    write_csv(os, list);
  } else {
    os << dump(json(list));
  }
  return {os.str(), 0};
}

struct LommelArgs {
  int m = 0;
  double nu = 0.0;
  bool assoc = false;
  bool roots = false;
};

Output cmd_lommel(const RunConfig& cfg, const LommelArgs& a) {
  const LommelCoefficients c = a.assoc ? assoc_coefficients(a.m, a.nu) : lommel_coefficients(a.m, a.nu);
  std::ostringstream os;
  if (a.roots) {
    // Roots of R_{m,nu} itself, i.e. the plain kind at lambda = nu - 1.
    const ZeroList r = a.assoc ? lommel_roots(a.m, a.nu, LommelKind::Associated)
                               : lommel_roots(a.m, a.nu - 1.0, LommelKind::Plain);
    if (is_csv(cfg)) {
      write_csv(os, r);
    } else {
      json j = c;
      j["roots"] = r;
      os << dump(j);
    }
  } else if (is_csv(cfg)) {
    write_csv(os, c);
  } else {
    os << dump(json(c));
  }
  return {os.str(), 0};
}

struct InterlaceArgs {
  std::string family;
  int m = 0;
  double nu = 0.0;
  int k = 0;
  std::optional<double> alpha;
  bool plain = false;
};

Output cmd_interlace(const RunConfig& cfg, const InterlaceArgs& a, std::ostream& err) {
  const Family family = family_from_string(a.family);
  if (family == Family::Cylinder && !a.alpha) throw UsageError("--alpha is required for --family c");
  if (family != Family::Cylinder && a.alpha) throw UsageError("--alpha only applies to --family c");
  const double alpha = a.alpha.value_or(0.0);
  const InterlaceOptions opt = options_from(cfg);
  const InterlaceReport r = a.plain ? verify_plain_interlacing(family, a.m, a.nu, a.k, alpha, opt)
                                    : verify_generalized_interlacing(family, a.m, a.nu, a.k, alpha, opt);
  std::ostringstream os;
  if (is_csv(cfg)) {
    write_csv(os, r);
  } else {
    json j = r;
    if (!a.plain) {
      // Neighbourhood of every Lommel root and common zero in the merged list.
      const std::size_t n_base = r.base_zeros.size() + r.common_zeros.size() + 2;
      const auto base = base_zeros(family, a.nu, static_cast<int>(n_base), alpha, cfg.zero_tol);
      const auto partner = partner_zeros(family, a.m, a.nu, a.k + 1, alpha, cfg.zero_tol);
      json sw = json::array();
      for (const MergedEntry& e : r.merged) {
        if (e.source == ZeroSource::HigherOrderZero) continue;
        const Sandwich s = remark_sandwich(e.value, base, partner);
        sw.push_back({{"center", e.value},
                      {"common", s.common},
                      {"ok", s.ok},
                      {"k", s.k},
                      {"s", s.s},
                      {"lower_partner", s.lower_partner},
                      {"lower_base", s.lower_base},
                      {"upper_base", s.upper_base},
                      {"upper_partner", s.upper_partner}});
      }
      j["sandwiches"] = sw;
    }
    os << dump(j);
  }
  if (!r.ok) {
    err << "interlacing violated at index " << *r.first_violation << " (" << r.pattern
        << " pattern)\n";
  }
  return {os.str(), r.ok ? 0 : 1};
}

struct CommonZeroArgs {
  int m = 0;
  std::optional<int> l;
  std::optional<int> k;
  std::vector<double> bracket;
  bool scan = false;
  double nu_max = 0.0;
  int k_max = 0;
  std::optional<double> alpha;
};

Output cmd_common_zero(const RunConfig& cfg, const CommonZeroArgs& a, std::ostream& err) {
  const double alpha = a.alpha.value_or(0.0);
  std::vector<NuStarSolution> sols;
  if (a.scan) {
    if (!a.bracket.empty() || a.l || a.k) throw UsageError("--scan excludes --bracket, --l and --k");
    if (a.k_max < 1) throw UsageError("--scan needs --k-max >= 1");
    sols = scan_nu_star(a.m, a.k_max, a.nu_max, alpha, cfg.jobs);
  } else {
    if (a.bracket.size() != 2) throw UsageError("--bracket F F is required unless --scan is given");
    if (a.l.has_value() != a.k.has_value()) throw UsageError("--l and --k must be given together");
    if (a.l) {
      sols.push_back(alpha == 0.0 ? solve_nu_star(a.m, *a.l, *a.k, a.bracket[0], a.bracket[1])
                                  : cylinder_nu_star(alpha, a.m, *a.l, *a.k, a.bracket[0], a.bracket[1]));
    } else {
      sols = solve_in_bracket(a.m, a.bracket[0], a.bracket[1], alpha);
      if (sols.empty()) {
        err << "no Lommel root crosses a base zero for nu in [" << format_g15(a.bracket[0]) << ", "
            << format_g15(a.bracket[1]) << "]\n";
      }
    }
  }
  int code = 0;
  for (const NuStarSolution& s : sols) {
    if (!(s.residual_j < kCommonResidual && s.residual_jm < kCommonResidual)) {
      err << "residual contract broken at nu* = " << format_g15(s.nu_star) << "\n";
      code = 1;
    }
  }
  if (!a.scan && sols.empty()) code = 1;
  std::ostringstream os;
  if (is_csv(cfg)) {
    write_csv(os, sols);
  } else {
    os << dump(json(sols));
  }
  return {os.str(), code};
}

struct WronskianArgs {
  int m = 0;
  double nu = 0.0;
  std::vector<double> x;
  int N = 5000;
  bool deriv = false;
};

Output cmd_wronskian(const RunConfig& cfg, const WronskianArgs& a, std::ostream& err) {
  std::vector<WronskianSample> samples;
  int code = 0;
  for (double x : a.x) {
    WronskianSample s = a.deriv ? derivative_wronskian_series(a.m, a.nu, x, a.N)
                                : wronskian_series(a.m, a.nu, x, a.N);
    const double gap = std::fabs(s.direct - s.series);
    if (!(gap <= s.tail_bound + 1e-9 * std::max(1.0, std::fabs(s.direct)))) {
      err << "series misses the direct Wronskian at x = " << format_g15(x) << " by "
          << format_g15(gap) << " (tail bound " << format_g15(s.tail_bound) << ")\n";
      code = 1;
    }
    samples.push_back(s);
  }
  std::ostringstream os;
  if (is_csv(cfg)) {
    write_csv(os, samples);
  } else {
    os << dump(json(samples));
  }
  return {os.str(), code};
}

struct TrajectoryArgs {
  int m = 0;
  double nu_from = 0.0;
  double nu_to = 0.0;
  double step = 0.0;
  int k_max = 6;
  int l_max = std::numeric_limits<int>::max();
};

Output cmd_trajectory(const RunConfig& cfg, const TrajectoryArgs& a) {
  const TrajectorySet t =
      trace_trajectories(a.m, a.nu_from, a.nu_to, a.step, a.k_max, a.l_max, cfg.jobs);
  std::ostringstream os;
  if (is_csv(cfg)) {
    write_csv(os, t.curves);
  } else {
    os << dump(json{{"curves", t.curves}, {"crossings", t.crossings}});
  }
  return {os.str(), 0};
}

Output cmd_eta(const RunConfig& cfg, int n) {
  const EtaRoot e = eta_limit(n);
  std::ostringstream os;
  if (is_csv(cfg)) {
    write_csv(os, e);
  } else {
    os << dump(json(e));
  }
  return {os.str(), 0};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bessel zeros, Lommel polynomials and generalized interlacing", "lommelkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; flags given on the command line win");

  RunConfig cfg;
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out_path, "write output to this file instead of stdout");
  app.add_option("--tol,--zero-tol", cfg.zero_tol, "zero residual tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--common-tol", cfg.common_tol, "common-zero tolerance")->check(CLI::PositiveNumber);
  app.add_option("--dedup-tol", cfg.dedup_tol, "Lommel-root merge tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--verbose", cfg.verbose, "diagnostics on stderr; report every violation");

  ZerosArgs za;
  auto* zeros_cmd = app.add_subcommand("zeros", "first positive zeros of J, Y, C or J'");
  zeros_cmd->add_option("--kind", za.kind)->required()->check(CLI::IsMember({"j", "y", "c", "jp"}));
  zeros_cmd->add_option("--nu", za.nu)->required();
  zeros_cmd->add_option("--alpha", za.alpha);
  zeros_cmd->add_option("--count", za.count)->required()->check(CLI::PositiveNumber);

  LommelArgs la;
  auto* lommel_cmd = app.add_subcommand("lommel", "coefficients and roots of R_{m,nu} or R*_{m,nu}");
  lommel_cmd->add_option("--m", la.m)->required()->check(CLI::NonNegativeNumber);
  lommel_cmd->add_option("--nu", la.nu)->required();
  lommel_cmd->add_flag("--assoc", la.assoc, "associated polynomial R*");
  lommel_cmd->add_flag("--roots", la.roots, "also list the positive roots");

  InterlaceArgs ia;
  auto* interlace_cmd = app.add_subcommand("interlace", "check (generalized) interlacing");
  interlace_cmd->add_option("--family", ia.family)->required()->check(CLI::IsMember({"j", "c", "jp"}));
  interlace_cmd->add_option("--m", ia.m)->required();
  interlace_cmd->add_option("--nu", ia.nu)->required();
  interlace_cmd->add_option("--k", ia.k, "number of partner zeros")->required();
  interlace_cmd->add_option("--alpha", ia.alpha);
  interlace_cmd->add_flag("--plain", ia.plain, "plain interlacing against partner zeros only");

  CommonZeroArgs ca;
  auto* common_cmd = app.add_subcommand("common-zero", "orders nu* where J_nu and J_{nu+m} share a zero");
  common_cmd->add_option("--m", ca.m)->required();
  common_cmd->add_option("--l", ca.l);
  common_cmd->add_option("--k", ca.k);
  common_cmd->add_option("--bracket", ca.bracket)->expected(2);
  common_cmd->add_flag("--scan", ca.scan);
  common_cmd->add_option("--nu-max", ca.nu_max);
  common_cmd->add_option("--k-max", ca.k_max);
  common_cmd->add_option("--alpha", ca.alpha);

  WronskianArgs wa;
  auto* wronskian_cmd = app.add_subcommand("wronskian", "direct vs. zero-series Wronskian");
  wronskian_cmd->add_option("--m", wa.m)->required();
  wronskian_cmd->add_option("--nu", wa.nu)->required();
  wronskian_cmd->add_option("--x", wa.x)->required()->expected(1, std::numeric_limits<int>::max());
  wronskian_cmd->add_option("--N", wa.N, "series truncation")->check(CLI::Range(100, 10000000));
  wronskian_cmd->add_flag("--deriv", wa.deriv, "derivative family W[J', R* J_{nu+m}]");

  TrajectoryArgs ta;
  auto* trajectory_cmd = app.add_subcommand("trajectory", "zero curves over nu, plot-ready");
  trajectory_cmd->add_option("--m", ta.m)->required();
  trajectory_cmd->add_option("--nu-from", ta.nu_from)->required();
  trajectory_cmd->add_option("--nu-to", ta.nu_to)->required();
  trajectory_cmd->add_option("--step", ta.step)->required()->check(CLI::PositiveNumber);
  trajectory_cmd->add_option("--k-max", ta.k_max)->check(CLI::PositiveNumber);
  trajectory_cmd->add_option("--l-max", ta.l_max)->check(CLI::NonNegativeNumber);

  int eta_n = 0;
  auto* eta_cmd = app.add_subcommand("eta", "large-order slopes of the Lommel roots");
  eta_cmd->add_option("--n", eta_n)->required()->check(CLI::Range(2, 60));

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Output result;
  try {
    if (*zeros_cmd) {
      result = cmd_zeros(cfg, za);
    } else if (*lommel_cmd) {
      result = cmd_lommel(cfg, la);
    } else if (*interlace_cmd) {
      result = cmd_interlace(cfg, ia, err);
    } else if (*common_cmd) {
      result = cmd_common_zero(cfg, ca, err);
    } else if (*wronskian_cmd) {
      result = cmd_wronskian(cfg, wa, err);
    } else if (*trajectory_cmd) {
      result = cmd_trajectory(cfg, ta);
    } else {
      result = cmd_eta(cfg, eta_n);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (cfg.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open --out " << cfg.out_path << "\n";
      return 2;
    }
    file << result.text;
  }
  if (cfg.verbose) {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "done in " << format_g15(secs) << " s, exit " << result.code << "\n";
  }
  return result.code;
}

}  // namespace lommelkit::cli
