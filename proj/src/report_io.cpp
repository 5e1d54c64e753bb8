#include "lommelkit/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <utility>

namespace lommelkit {

namespace {

json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

double get_num(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return v.get<double>();
}

json nums(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

std::vector<double> get_nums(const json& j, const char* key) {
  std::vector<double> out;
  for (const json& v : j.at(key)) {
    out.push_back(v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>());
  }
  return out;
}

}  // namespace

void to_json(json& j, const FunctionId& v) {
  j = json{{"kind", std::string(to_string(v.kind))}, {"order", num(v.order)}};
  j["alpha"] = v.alpha ? num(*v.alpha) : json(nullptr);
  j["degree"] = v.degree ? json(*v.degree) : json(nullptr);
}

void from_json(const json& j, FunctionId& v) {
  v.kind = function_kind_from_string(j.at("kind").get<std::string>());
  v.order = get_num(j, "order");
  v.alpha.reset();
  v.degree.reset();
  if (j.contains("alpha") && !j["alpha"].is_null()) v.alpha = j["alpha"].get<double>();
  if (j.contains("degree") && !j["degree"].is_null()) v.degree = j["degree"].get<int>();
}

void to_json(json& j, const ZeroList& v) {
  j = json{{"function", v.fid},
           {"zeros", nums(v.zeros)},
           {"residuals", nums(v.residuals)},
           {"method", v.method},
           {"tolerance", num(v.tolerance)}};
}

void from_json(const json& j, ZeroList& v) {
  v.fid = j.at("function").get<FunctionId>();
  v.zeros = get_nums(j, "zeros");
  v.residuals = get_nums(j, "residuals");
  v.method = j.at("method").get<std::string>();
  v.tolerance = get_num(j, "tolerance");
}

void to_json(json& j, const LommelCoefficients& v) {
  j = json{{"m", v.m}, {"nu", num(v.nu)}, {"kind", to_string(v.kind)}, {"coeffs", nums(v.coeffs)}};
}

void from_json(const json& j, LommelCoefficients& v) {
  v.m = j.at("m").get<int>();
  v.nu = get_num(j, "nu");
  v.kind = lommel_kind_from_string(j.at("kind").get<std::string>());
  v.coeffs = get_nums(j, "coeffs");
}

void to_json(json& j, const EtaRoot& v) {
  j = json{{"n", v.n}, {"roots", nums(v.roots)}, {"residuals", nums(v.residuals)}};
}

void from_json(const json& j, EtaRoot& v) {
  v.n = j.at("n").get<int>();
  v.roots = get_nums(j, "roots");
  v.residuals = get_nums(j, "residuals");
}

void to_json(json& j, const MergedEntry& v) {
  j = json{{"value", num(v.value)}, {"source", to_string(v.source)}};
}

void from_json(const json& j, MergedEntry& v) {
  v.value = get_num(j, "value");
  v.source = zero_source_from_string(j.at("source").get<std::string>());
}

void to_json(json& j, const MergedZeros& v) {
  j = json{{"family", to_string(v.family)}, {"m", v.m},           {"nu", num(v.nu)},
           {"alpha", num(v.alpha)},         {"entries", v.entries}, {"warnings", v.warnings}};
}

void from_json(const json& j, MergedZeros& v) {
  v.family = family_from_string(j.at("family").get<std::string>());
  v.m = j.at("m").get<int>();
  v.nu = get_num(j, "nu");
  v.alpha = get_num(j, "alpha");
  v.entries = j.at("entries").get<std::vector<MergedEntry>>();
  v.warnings = j.at("warnings").get<std::vector<std::string>>();
}

void to_json(json& j, const CommonZeroPoint& v) {
  j = json{{"x", num(v.x)}, {"low_residual", num(v.low_residual)},
           {"high_residual", num(v.high_residual)}};
}

void from_json(const json& j, CommonZeroPoint& v) {
  v.x = get_num(j, "x");
  v.low_residual = get_num(j, "low_residual");
  v.high_residual = get_num(j, "high_residual");
}

void to_json(json& j, const CommonZeroSet& v) {
  j = json{{"family", to_string(v.family)}, {"m", v.m},           {"nu", num(v.nu)},
           {"alpha", num(v.alpha)},         {"points", v.points}, {"tolerance", num(v.tolerance)}};
}

void from_json(const json& j, CommonZeroSet& v) {
  v.family = family_from_string(j.at("family").get<std::string>());
  v.m = j.at("m").get<int>();
  v.nu = get_num(j, "nu");
  v.alpha = get_num(j, "alpha");
  v.points = j.at("points").get<std::vector<CommonZeroPoint>>();
  v.tolerance = get_num(j, "tolerance");
}

void to_json(json& j, const InterlaceReport& v) {
  j = json{{"family", to_string(v.family)},
           {"m", v.m},
           {"nu", num(v.nu)},
           {"alpha", num(v.alpha)},
           {"pattern", v.pattern},
           {"ok", v.ok},
           {"first_violation", v.first_violation ? json(*v.first_violation) : json(nullptr)},
           {"violations", v.violations},
           {"common_zeros", nums(v.common_zeros)},
           {"skipped_base_zeros", nums(v.skipped_base_zeros)},
           {"base_zeros", nums(v.base_zeros)},
           {"merged", v.merged},
           {"min_gap", num(v.min_gap)}};
}

void from_json(const json& j, InterlaceReport& v) {
  v.family = family_from_string(j.at("family").get<std::string>());
  v.m = j.at("m").get<int>();
  v.nu = get_num(j, "nu");
  v.alpha = get_num(j, "alpha");
  v.pattern = j.at("pattern").get<std::string>();
  v.ok = j.at("ok").get<bool>();
  v.first_violation.reset();
  if (!j.at("first_violation").is_null()) v.first_violation = j["first_violation"].get<std::size_t>();
  v.violations = j.at("violations").get<std::vector<std::size_t>>();
  v.common_zeros = get_nums(j, "common_zeros");
  v.skipped_base_zeros = get_nums(j, "skipped_base_zeros");
  v.base_zeros = get_nums(j, "base_zeros");
  v.merged = j.at("merged").get<std::vector<MergedEntry>>();
  v.min_gap = get_num(j, "min_gap");
}

void to_json(json& j, const WronskianSample& v) {
  j = json{{"x", num(v.x)},
           {"direct", num(v.direct)},
           {"series", num(v.series)},
           {"truncation", v.truncation},
           {"tail_bound", num(v.tail_bound)},
           {"near_singularity", v.near_singularity}};
}

void from_json(const json& j, WronskianSample& v) {
  v.x = get_num(j, "x");
  v.direct = get_num(j, "direct");
  v.series = get_num(j, "series");
  v.truncation = j.at("truncation").get<int>();
  v.tail_bound = get_num(j, "tail_bound");
  v.near_singularity = j.at("near_singularity").get<bool>();
}

void to_json(json& j, const NuStarSolution& v) {
  j = json{{"m", v.m},
           {"l", v.l},
           {"k", v.k},
           {"alpha", num(v.alpha)},
           {"nu_star", num(v.nu_star)},
           {"x_star", num(v.x_star)},
           {"residual_j", num(v.residual_j)},
           {"residual_jm", num(v.residual_jm)},
           {"bracket", nums({v.nu_lo, v.nu_hi})},
           {"iterations", v.iterations},
           {"near_simple_rational", v.near_simple_rational},
           {"nu_star_irrational", true}};
}

void from_json(const json& j, NuStarSolution& v) {
  v.m = j.at("m").get<int>();
  v.l = j.at("l").get<int>();
  v.k = j.at("k").get<int>();
  v.alpha = get_num(j, "alpha");
  v.nu_star = get_num(j, "nu_star");
  v.x_star = get_num(j, "x_star");
  v.residual_j = get_num(j, "residual_j");
  v.residual_jm = get_num(j, "residual_jm");
  const auto bracket = get_nums(j, "bracket");
  if (bracket.size() != 2) throw json::type_error::create(302, "bracket must have two entries", &j);
  v.nu_lo = bracket[0];
  v.nu_hi = bracket[1];
  v.iterations = j.at("iterations").get<int>();
  v.near_simple_rational = j.at("near_simple_rational").get<bool>();
}

void to_json(json& j, const TrajectorySample& v) { j = json{{"nu", num(v.nu)}, {"x", num(v.x)}}; }

void from_json(const json& j, TrajectorySample& v) {
  v.nu = get_num(j, "nu");
  v.x = get_num(j, "x");
}

void to_json(json& j, const Trajectory& v) {
  j = json{{"m", v.m}, {"curve_id", v.curve_id}, {"samples", v.samples}};
}

void from_json(const json& j, Trajectory& v) {
  v.m = j.at("m").get<int>();
  v.curve_id = j.at("curve_id").get<std::string>();
  v.samples = j.at("samples").get<std::vector<TrajectorySample>>();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_g15(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void write_csv(std::ostream& os, const ZeroList& v) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < v.zeros.size(); ++i) {
    rows.push_back({std::to_string(i + 1), format_g15(v.zeros[i]),
                    format_g15(i < v.residuals.size() ? v.residuals[i] : 0.0)});
  }
  write_csv(os, {"k", "zero", "residual"}, rows);
}

void write_csv(std::ostream& os, const LommelCoefficients& v) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t k = 0; k < v.coeffs.size(); ++k) {
    rows.push_back({std::to_string(k), std::to_string(2 * static_cast<int>(k) - v.m),
                    format_g15(v.coeffs[k])});
  }
  write_csv(os, {"k", "power_of_x_over_2", "coeff"}, rows);
}

void write_csv(std::ostream& os, const EtaRoot& v) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < v.roots.size(); ++i) {
    rows.push_back({std::to_string(i + 1), format_g15(v.roots[i]), format_g15(v.residuals[i])});
  }
  write_csv(os, {"l", "eta", "residual"}, rows);
}

void write_csv(std::ostream& os, const InterlaceReport& v) {
  // Both sequences in one table, sorted by value, so the alternation reads top to bottom.
  std::vector<std::pair<double, std::string>> all;
  for (double b : v.base_zeros) all.emplace_back(b, "base");
  for (const MergedEntry& e : v.merged) all.emplace_back(e.value, to_string(e.source));
  for (double s : v.skipped_base_zeros) all.emplace_back(s, "skipped_base");
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < all.size(); ++i) {
    rows.push_back({std::to_string(i), format_g15(all[i].first), all[i].second});
  }
  write_csv(os, {"index", "value", "role"}, rows);
}

void write_csv(std::ostream& os, const CommonZeroSet& v) {
  std::vector<std::vector<std::string>> rows;
  for (const CommonZeroPoint& p : v.points) {
    rows.push_back({format_g15(p.x), format_g15(p.low_residual), format_g15(p.high_residual)});
  }
  write_csv(os, {"x", "low_residual", "high_residual"}, rows);
}

void write_csv(std::ostream& os, const std::vector<WronskianSample>& v) {
  std::vector<std::vector<std::string>> rows;
  for (const WronskianSample& s : v) {
    rows.push_back({format_g15(s.x), format_g15(s.direct), format_g15(s.series),
                    std::to_string(s.truncation), format_g15(s.tail_bound),
                    s.near_singularity ? "1" : "0"});
  }
  write_csv(os, {"x", "direct", "series", "truncation", "tail_bound", "near_singularity"}, rows);
}

void write_csv(std::ostream& os, const std::vector<NuStarSolution>& v) {
  std::vector<std::vector<std::string>> rows;
  for (const NuStarSolution& s : v) {
    rows.push_back({std::to_string(s.m), std::to_string(s.l), std::to_string(s.k),
                    format_g15(s.alpha), format_g15(s.nu_star), format_g15(s.x_star),
                    format_g15(s.residual_j), format_g15(s.residual_jm), format_g15(s.nu_lo),
                    format_g15(s.nu_hi), std::to_string(s.iterations),
                    s.near_simple_rational ? "1" : "0"});
  }
  write_csv(os,
            {"m", "l", "k", "alpha", "nu_star", "x_star", "residual_j", "residual_jm", "nu_lo",
             "nu_hi", "iterations", "near_simple_rational"},
            rows);
}

void write_csv(std::ostream& os, const std::vector<Trajectory>& v) {
  std::vector<std::vector<std::string>> rows;
  for (const Trajectory& t : v) {
    for (const TrajectorySample& s : t.samples) {
      rows.push_back({t.curve_id, format_g15(s.nu), format_g15(s.x)});
    }
  }
  write_csv(os, {"curve_id", "nu", "x"}, rows);
}

}  // namespace lommelkit
