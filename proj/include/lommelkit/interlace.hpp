#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lommelkit {

// Three families of "base function vs. higher-order partner" pairs:
//   BesselJ     base J_nu,        partner R_{m-1,nu+1} J_{nu+m}     (omega)
//   Cylinder    base C_nu^alpha,  partner R_{m-1,nu+1} C_{nu+m}^alpha (tau)
//   Derivative  base J'_nu,       partner R*_{m,nu} J_{nu+m}        (omega*)
enum class Family { BesselJ, Cylinder, Derivative };

const char* to_string(Family family);
Family family_from_string(const std::string& name);  // "j", "c", "jp" or the enum names

enum class ZeroSource { HigherOrderZero, LommelRoot, CommonZero };

const char* to_string(ZeroSource source);
ZeroSource zero_source_from_string(const std::string& name);

struct InterlaceOptions {
  double zero_tol = 1e-12;
  double common_tol = 1e-8;  // |f_high(x)| < common_tol * max(1, |f_high'(x)|) at a base zero
  double dedup_tol = 1e-7;   // relative distance collapsing a Lommel root onto a partner zero
  double gap_margin = 1e-8;  // alternation must hold with at least this absolute gap
  bool keep_all_violations = false;
};

struct MergedEntry {
  double value = 0.0;
  ZeroSource source = ZeroSource::HigherOrderZero;
  bool operator==(const MergedEntry&) const = default;
};

/// Zeros of the partner Bessel-type function merged with the Lommel-type roots,
/// cut at the K-th partner zero so the list has no gaps.
struct MergedZeros {
  int m = 0;
  double nu = 0.0;
  double alpha = 0.0;
  Family family = Family::BesselJ;
  std::vector<MergedEntry> entries;
  std::vector<std::string> warnings;  // near-coincidences that were not merged
  bool operator==(const MergedZeros&) const = default;
};

struct CommonZeroPoint {
  double x = 0.0;
  double low_residual = 0.0;   // |base(x)|
  double high_residual = 0.0;  // |partner Bessel-type function(x)|
  bool operator==(const CommonZeroPoint&) const = default;
};

struct CommonZeroSet {
  Family family = Family::BesselJ;
  int m = 0;
  double nu = 0.0;
  double alpha = 0.0;
  std::vector<CommonZeroPoint> points;
  double tolerance = 0.0;
  bool operator==(const CommonZeroSet&) const = default;
};

/// floor((m-1)/2) for BesselJ and Cylinder, floor(m/2) for Derivative.
int common_zero_bound(Family family, int m);

struct InterlaceReport {
  Family family = Family::BesselJ;
  int m = 0;
  double nu = 0.0;
  double alpha = 0.0;
  std::string pattern;  // "classical", "generalized" or "plain"
  bool ok = false;
  std::optional<std::size_t> first_violation;
  std::vector<std::size_t> violations;  // every violating index when keep_all_violations
  std::vector<double> skipped_base_zeros;
  std::vector<double> base_zeros;  // after removing common zeros
  std::vector<double> common_zeros;
  std::vector<MergedEntry> merged;
  double min_gap = 0.0;
  bool operator==(const InterlaceReport&) const = default;
};

struct WronskianSample {
  double x = 0.0;
  double direct = 0.0;
  double series = 0.0;
  int truncation = 0;
  double tail_bound = 0.0;
  bool near_singularity = false;  // x within 1e-6 of a partner zero; the series used its limit form
  bool operator==(const WronskianSample&) const = default;
};

/// Base zeros of the family: j_{nu,k}, c_{nu,k} or j'_{nu,k}.
std::vector<double> base_zeros(Family family, double nu, int K, double alpha = 0.0,
                               double zero_tol = 1e-12);
/// Zeros of the partner J_{nu+m} or C_{nu+m}.
std::vector<double> partner_zeros(Family family, int m, double nu, int K, double alpha = 0.0,
                                  double zero_tol = 1e-12);
/// Positive roots of R_{m-1,nu+1} (BesselJ, Cylinder) or R*_{m,nu} (Derivative).
std::vector<double> lommel_partner_roots(Family family, int m, double nu);

/// Common zeros among the first K base zeros.
CommonZeroSet detect_common_zeros(Family family, int m, double nu, int K, double alpha = 0.0,
                                  const InterlaceOptions& options = {});

MergedZeros merged_sequence(Family family, int m, double nu, int K, double alpha = 0.0,
                            const InterlaceOptions& options = {});

/// Generalized interlacing: base zeros with the common zeros removed must
/// strictly alternate with the merged sequence, starting with a base zero.
InterlaceReport verify_generalized_interlacing(Family family, int m, double nu, int K,
                                               double alpha = 0.0,
                                               const InterlaceOptions& options = {});

/// Plain interlacing of base zeros against partner zeros alone.
InterlaceReport verify_plain_interlacing(Family family, int m, double nu, int K,
                                         double alpha = 0.0, const InterlaceOptions& options = {});

/// Index of the first i with !(base[i] + margin < other[i] < base[i+1] - margin),
/// over i < other.size(); base needs one more entry than other.
std::optional<std::size_t> first_alternation_violation(const std::vector<double>& base,
                                                       const std::vector<double>& other,
                                                       double margin, double* min_gap = nullptr,
                                                       std::vector<std::size_t>* all = nullptr);

/// Neighbourhood of a Lommel root or common zero `center`:
///   root:    h_k < b_s < center < b_{s+1} < h_{k+1}
///   common:  h_{k-1} < b_{s-1} < center = b_s < b_{s+1} < h_{k+1}
/// Partner zeros are 1-based with h_0 = 0. Indices refer to the full base list.
struct Sandwich {
  bool ok = false;
  bool common = false;
  int k = 0;
  int s = 0;
  double lower_partner = 0.0;
  double lower_base = 0.0;
  double center = 0.0;
  double upper_base = 0.0;
  double upper_partner = 0.0;
};

Sandwich remark_sandwich(double center, const std::vector<double>& base,
                         const std::vector<double>& partner, double rel_tol = 1e-7);

/// No two consecutive base zeros are both common zeros.
bool no_consecutive_common_zeros(int m, double nu, int K, const InterlaceOptions& options = {});

/// Zeros of C_nu and roots of R_{m-1,nu+1} below c_{nu+m,1}: they must
/// alternate c_1 < rho_1 < ... < c_N with exactly N - 1 roots, and satisfy
/// (-1)^{k+1} R_{m-1,nu+1}(c_k) > 0 and (-1)^l C_nu(rho_l) > 0.
struct CylinderLowRegion {
  double upper = 0.0;  // c_{nu+m,1}
  std::vector<double> base_zeros;
  std::vector<double> roots;
  bool alternates = false;
  bool count_ok = false;
  bool sign_claims = false;
  bool ok() const { return alternates && count_ok && sign_claims; }
};

CylinderLowRegion cylinder_low_region(double alpha, int m, double nu);

/// min of x W[C_{nu+m-1}, C_{nu+m}](x) over `samples` points spread over
/// (c_{nu+m-1,1}, x_max].
struct WronskianPositivity {
  double min_value = 0.0;
  double at_x = 0.0;
  bool ok = false;
};

WronskianPositivity cylinder_wronskian_positivity(double alpha, int m, double nu, double x_max,
                                                  int samples);

/// W[J_nu, R_{m-1,nu+1} J_{nu+m}](x): literal derivative form vs. the
/// series over the first N zeros of J_{nu+m}.
WronskianSample wronskian_series(int m, double nu, double x, int N);

/// W[J'_nu, R*_{m,nu} J_{nu+m}](x), same two routes.
WronskianSample derivative_wronskian_series(int m, double nu, double x, int N);

/// JJ_nu / JJ_{nu+1} against its partial-fraction expansion over the zeros of J_{nu+1}.
struct PartialFractionCheck {
  double lhs = 0.0;
  double truncated = 0.0;        // 1 + first N terms
  double raw_residual = 0.0;     // |lhs - truncated|
  double raw_tail_bound = 0.0;   // integral bound on the omitted terms
  double tail_estimate = 0.0;    // midpoint-integral estimate of the omitted terms
  double residual = 0.0;         // |lhs - truncated - tail_estimate|
  double coefficient_residual = 0.0;  // max_k |2(nu+1) JJ_nu(j)/(j JJ'_{nu+1}(j)) - 1|
  bool near_pole = false;
};

PartialFractionCheck partial_fraction_check(double nu, double x, int N);

}  // namespace lommelkit
