#include "lommelkit/special_eval.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lommelkit/errors.hpp"

namespace lommelkit {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long double kLongEps = LDBL_EPSILON;
constexpr double kPi = std::numbers::pi;
constexpr double kTiny = 1e-300;
constexpr double kRescale = 1e250;
constexpr double kMaxOrder = 1000.0;
constexpr int kMaxIterations = 1'000'000;

// Taylor coefficients of 1/Gamma(1+z) about z = 0.
constexpr std::array<double, 29> kRecipGammaTaylor = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -0.0000012504934821426706573,
    0.0000011330272319816958824,
    -0.00000020563384169776071035,
    0.0000000061160951044814158179,
    0.0000000050020076444692229301,
    -0.0000000011812745704870201446,
    0.00000000010434267116911005105,
    0.000000000007782263439905071254,
    -0.0000000000036968056186422057082,
    0.0000000000005100370287454475979,
    -0.000000000000020583260535665067832,
    -0.0000000000000053481225394230179824,
    0.0000000000000012267786282382607902,
    -0.00000000000000011812593016974587695,
    0.0000000000000000011866922547516003326,
    0.0000000000000000014123806553180317816,
    -0.00000000000000000022987456844353702066,
};

void check_order(double nu) {
  if (!std::isfinite(nu)) throw DomainError("Bessel order must be finite");
  if (std::fabs(nu) > kMaxOrder) {
    throw OverflowError("Bessel order " + std::to_string(nu) + " is outside the supported range");
  }
}

void check_argument(double x) {
  if (std::isnan(x) || std::isinf(x)) throw DomainError("Bessel argument must be finite");
  if (x < 0.0) throw DomainError("Bessel argument must be non-negative, got " + std::to_string(x));
}

double finite_or_throw(double v, const char* what, double nu, double x) {
  if (!std::isfinite(v)) {
    throw OverflowError(std::string(what) + " overflows at nu=" + std::to_string(nu) +
                        ", x=" + std::to_string(x));
  }
  return v;
}

bool is_integer(double v) { return v == std::nearbyint(v); }

bool series_regime(double nu, double x) { return x <= 2.0 || 0.25 * x * x <= nu + 1.0; }

bool hankel_regime(double nu, double x) {
  const double a = std::fabs(nu) + 1.0;
  return x >= std::max(25.0, 0.5 * a * a);
}

struct SeriesValue {
  double j = 0.0;
  double jp = 0.0;
  double error = 0.0;
};

// Ascending series of J_nu and J'_nu; nu must not be a negative integer.
SeriesValue j_series(double nu, double x) {
  const double half = 0.5 * x;
  double lead = std::pow(half, nu) / std::tgamma(nu + 1.0);
  if (!std::isfinite(lead) && nu + 1.0 > 0.0) {
    lead = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
  }
  const long double q = -static_cast<long double>(half) * half;
  long double term = lead;
  long double sum = term;
  long double dsum = nu * term;
  long double abs_sum = std::fabs(term);
  long double last = 0.0L;
  for (int k = 1; k < kMaxIterations; ++k) {
    term *= q / (static_cast<long double>(k) * (nu + k));
    sum += term;
    dsum += (2.0L * k + nu) * term;
    abs_sum += std::fabs(term);
    last = std::fabs(term);
    const bool decreasing = -q < static_cast<long double>(k) * std::fabs(nu + k);
    if (decreasing && last <= kLongEps * std::fabs(sum) * 1e-3L) break;
    if (decreasing && last == 0.0L) break;
  }
  SeriesValue out;
  out.j = static_cast<double>(sum);
  out.jp = static_cast<double>(dsum / x);
  out.error = (16.0 + 0.5 * std::fabs(nu)) * kEps * std::fabs(out.j) +
              static_cast<double>(64.0L * kLongEps * abs_sum + last);
  return out;
}

// Fills J_nu, J'_nu, Y_nu, Y'_nu for nu >= 0, x > 0 using Temme's series for the
// base order (x < 2) or Steed's CF2 (x >= 2), with CF1 for J'_nu/J_nu.
BesselPair steed_temme(double nu, double x) {
  const int nl = x < 2.0 ? static_cast<int>(nu + 0.5)
                         : std::max(0, static_cast<int>(nu - x + 1.5));
  const double mu = nu - nl;
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / kPi;

  // CF1: h -> J'_nu / J_nu.
  int isign = 1;
  double h = std::max(nu * xi, kTiny);
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int it = 0;
  for (; it < kMaxIterations; ++it) {
    b += xi2;
    d = b - d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b - 1.0 / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  if (it == kMaxIterations) {
    throw ConvergenceError("CF1 for J'/J did not converge at nu=" + std::to_string(nu) +
                           ", x=" + std::to_string(x));
  }
  const int cf1_iterations = it;

  // Downward recurrence nu -> mu on unnormalised values.
  double jl = isign * 1e-30;
  double jpl = h * jl;
  double jl_top = jl;
  double jp_top = jpl;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double jtemp = fact * jl + jpl;
    fact -= xi;
    jpl = fact * jtemp - jl;
    jl = jtemp;
    if (std::fabs(jl) > kRescale) {
      jl /= kRescale;
      jpl /= kRescale;
      jl_top /= kRescale;
      jp_top /= kRescale;
    }
  }
  if (jl == 0.0) jl = kEps;
  const double f = jpl / jl;

  double jmu = 0.0;
  double ymu = 0.0;
  double ymu_p = 0.0;
  double y1 = 0.0;
  if (x < 2.0) {
    // Temme's series for Y_mu, Y_{mu+1}, |mu| <= 1/2.
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact1 = std::fabs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::fabs(e) < kEps ? 1.0 : std::sinh(e) / e;
    double gam1 = 0.0;
    double gam2 = 0.0;
    double mpow = 1.0;
    for (std::size_t i = 0; i < kRecipGammaTaylor.size(); i += 2) {
      gam2 += kRecipGammaTaylor[i] * mpow;
      if (i + 1 < kRecipGammaTaylor.size()) gam1 -= kRecipGammaTaylor[i + 1] * mpow;
      mpow *= mu2;
    }
    const double gampl = gam2 - mu * gam1;  // 1/Gamma(1+mu)
    const double gammi = gam2 + mu * gam1;  // 1/Gamma(1-mu)
    double ff = 2.0 / kPi * fact1 * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    e = std::exp(e);
    double p = e / (gampl * kPi);
    double q = 1.0 / (e * kPi * gammi);
    const double pimu2 = 0.5 * pimu;
    const double fact3 = std::fabs(pimu2) < kEps ? 1.0 : std::sin(pimu2) / pimu2;
    const double r = kPi * pimu2 * fact3 * fact3;
    double cc = 1.0;
    d = -x2 * x2;
    double sum = ff + r * q;
    double sum1 = p;
    int i = 1;
    for (; i < kMaxIterations; ++i) {
      ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu2);
      cc *= d / i;
      p /= i - mu;
      q /= i + mu;
      const double del = cc * (ff + r * q);
      sum += del;
      const double del1 = cc * p - i * del;
      sum1 += del1;
      if (std::fabs(del) < (1.0 + std::fabs(sum)) * kEps) break;
    }
    if (i == kMaxIterations) throw ConvergenceError("Temme series did not converge");
    ymu = -sum;
    y1 = -sum1 * xi2;
    ymu_p = mu * xi * ymu - y1;
    jmu = w / (ymu_p - f * ymu);
  } else {
    // Steed's CF2 for p + iq = (J'_mu + i Y'_mu) / (J_mu + i Y_mu).
    double a = 0.25 - mu2;
    double p = -0.5 * xi;
    double q = 1.0;
    const double br = 2.0 * x;
    double bi = 2.0;
    double fct = a * xi / (p * p + q * q);
    double cr = br + q * fct;
    double ci = bi + p * fct;
    double den = br * br + bi * bi;
    double dr = br / den;
    double di = -bi / den;
    double dlr = cr * dr - ci * di;
    double dli = cr * di + ci * dr;
    double temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    int i = 2;
    for (; i < kMaxIterations; ++i) {
      a += 2 * (i - 1);
      bi += 2.0;
      dr = a * dr + br;
      di = a * di + bi;
      if (std::fabs(dr) + std::fabs(di) < kTiny) dr = kTiny;
      fct = a / (cr * cr + ci * ci);
      cr = br + cr * fct;
      ci = bi - ci * fct;
      if (std::fabs(cr) + std::fabs(ci) < kTiny) cr = kTiny;
      den = dr * dr + di * di;
      dr /= den;
      di /= -den;
      dlr = cr * dr - ci * di;
      dli = cr * di + ci * dr;
      temp = p * dlr - q * dli;
      q = p * dli + q * dlr;
      p = temp;
      if (std::fabs(dlr - 1.0) + std::fabs(dli) < kEps) break;
    }
    if (i == kMaxIterations) throw ConvergenceError("CF2 did not converge");
    const double gam = (p - f) / q;
    jmu = std::sqrt(w / ((p - f) * gam + q));
    jmu = std::copysign(jmu, jl);
    ymu = jmu * gam;
    ymu_p = ymu * p + jmu * q;
    y1 = mu * xi * ymu - ymu_p;
  }

  const double scale = jmu / jl;
  BesselPair out;
  out.j = jl_top * scale;
  out.jp = jp_top * scale;
  for (int i = 1; i <= nl; ++i) {
    const double ytemp = (mu + i) * xi2 * y1 - ymu;
    ymu = y1;
    y1 = ytemp;
  }
  out.y = ymu;
  out.yp = nu * xi * ymu - y1;

  const double steps = 64.0 + 8.0 * nl + 4.0 * x + 0.05 * cf1_iterations;
  const double envelope = x > nu ? std::hypot(out.j, out.y) : 0.0;
  out.j_error = steps * kEps * std::max(std::fabs(out.j), envelope);
  out.y_error = steps * kEps * std::max(std::fabs(out.y), envelope);
  out.method = EvalMethod::BackwardRecurrence;
  out.y_method = EvalMethod::BackwardRecurrence;
  return out;
}

struct HankelPQ {
  double p = 1.0;
  double q = 0.0;
  double error = 0.0;
};

HankelPQ hankel_pq(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  HankelPQ out;
  double t = 1.0;
  double abs_sum = 1.0;
  for (int k = 1; k < 400; ++k) {
    const double odd = 2.0 * k - 1.0;
    t *= (mu - odd * odd) / (8.0 * k * x);
    const double signed_t = ((k / 2) % 2 == 0) ? t : -t;
    if (k % 2 == 0) {
      out.p += signed_t;
    } else {
      out.q += signed_t;
    }
    abs_sum += std::fabs(t);
    if (std::fabs(t) < 0.05 * kEps) {
      out.error = std::fabs(t) + 4.0 * kEps * abs_sum;
      return out;
    }
  }
  throw ConvergenceError("Hankel expansion did not converge at nu=" + std::to_string(nu) +
                         ", x=" + std::to_string(x));
}

// J_nu, Y_nu from the Hankel expansion; nu >= 0 within the hankel regime.
void hankel_jy(double nu, double x, double& j, double& y, double& err) {
  const HankelPQ pq = hankel_pq(nu, x);
  const double phase = 0.5 * nu + 0.25;
  const double cp = cos_pi(phase);
  const double sp = sin_pi(phase);
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cchi = cx * cp + sx * sp;
  const double schi = sx * cp - cx * sp;
  const double s = std::sqrt(2.0 / (kPi * x));
  j = s * (pq.p * cchi - pq.q * schi);
  y = s * (pq.p * schi + pq.q * cchi);
  err = s * (pq.error + 4.0 * kEps * (1.0 + x * kEps * 0.5 + std::fabs(pq.q)));
}

BesselPair hankel_pair(double nu, double x) {
  BesselPair out;
  double j1 = 0.0;
  double y1 = 0.0;
  double e0 = 0.0;
  double e1 = 0.0;
  hankel_jy(nu, x, out.j, out.y, e0);
  hankel_jy(nu + 1.0, x, j1, y1, e1);
  out.jp = nu / x * out.j - j1;
  out.yp = nu / x * out.y - y1;
  out.j_error = e0;
  out.y_error = e0;
  out.method = EvalMethod::Asymptotic;
  out.y_method = EvalMethod::Asymptotic;
  return out;
}

// nu >= 0, x > 0. J from the series when in the series regime.
BesselPair positive_order_pair(double nu, double x, bool need_y) {
  if (hankel_regime(nu, x)) return hankel_pair(nu, x);
  if (series_regime(nu, x)) {
    BesselPair out;
    if (need_y) out = steed_temme(nu, x);
    const SeriesValue s = j_series(nu, x);
    out.j = s.j;
    out.jp = s.jp;
    out.j_error = s.error;
    out.method = EvalMethod::Series;
    return out;
  }
  return steed_temme(nu, x);
}

BesselPair pair_any_order(double nu, double x, bool need_y) {
  if (nu >= 0.0) return positive_order_pair(nu, x, need_y);
  if (is_integer(nu)) {
    BesselPair out = positive_order_pair(-nu, x, need_y);
    if (static_cast<long long>(-nu) % 2 != 0) {
      out.j = -out.j;
      out.jp = -out.jp;
      out.y = -out.y;
      out.yp = -out.yp;
    }
    return out;
  }
  const double m = -nu;
  if (!need_y && series_regime(nu, x)) {
    const SeriesValue s = j_series(nu, x);
    BesselPair out;
    out.j = s.j;
    out.jp = s.jp;
    out.j_error = s.error;
    out.method = EvalMethod::Series;
    return out;
  }
  const BesselPair base = positive_order_pair(m, x, true);
  const double c = cos_pi(m);
  const double s = sin_pi(m);
  BesselPair out;
  out.j = c * base.j - s * base.y;
  out.jp = c * base.jp - s * base.yp;
  out.y = s * base.j + c * base.y;
  out.yp = s * base.jp + c * base.yp;
  const double combo = std::fabs(c) * base.j_error + std::fabs(s) * base.y_error;
  out.j_error = combo + 4.0 * kEps * (std::fabs(c * base.j) + std::fabs(s * base.y));
  out.y_error = combo + 4.0 * kEps * (std::fabs(s * base.j) + std::fabs(c * base.y));
  out.method = EvalMethod::Connection;
  out.y_method = EvalMethod::Connection;
  return out;
}

double derivative_error(double value_error, double nu, double x) {
  return value_error * (2.0 + std::fabs(nu) / x);
}

// Gamma(nu+1) (x/2)^{-nu}, x > 0, nu > -1.
double scaled_factor(double nu, double x) {
  double f = std::tgamma(nu + 1.0) * std::pow(0.5 * x, -nu);
  if (!std::isfinite(f) || f == 0.0) f = std::exp(std::lgamma(nu + 1.0) - nu * std::log(0.5 * x));
  return f;
}

}  // namespace

const char* to_string(EvalMethod method) {
  switch (method) {
    case EvalMethod::Series: return "Series";
    case EvalMethod::BackwardRecurrence: return "BackwardRecurrence";
    case EvalMethod::Asymptotic: return "Asymptotic";
    case EvalMethod::Connection: return "Connection";
    case EvalMethod::ContinuedFraction: return "ContinuedFraction";
  }
  return "unknown";
}

double sin_pi(double x) {
  const double n = std::nearbyint(2.0 * x);
  const double r = x - 0.5 * n;
  const long long q = static_cast<long long>(std::fmod(n, 4.0) + 4.0) % 4;
  const double s = std::sin(kPi * r);
  const double c = std::cos(kPi * r);
  switch (q) {
    case 0: return s;
    case 1: return c;
    case 2: return -s;
    default: return -c;
  }
}

double cos_pi(double x) {
  const double n = std::nearbyint(2.0 * x);
  const double r = x - 0.5 * n;
  const long long q = static_cast<long long>(std::fmod(n, 4.0) + 4.0) % 4;
  const double s = std::sin(kPi * r);
  const double c = std::cos(kPi * r);
  switch (q) {
    case 0: return c;
    case 1: return -s;
    case 2: return -c;
    default: return s;
  }
}

BesselPair bessel_jy(double nu, double x) {
  check_order(nu);
  check_argument(x);
  if (x == 0.0) throw DomainError("Y_nu is singular at x = 0");
  BesselPair out = pair_any_order(nu, x, true);
  finite_or_throw(out.j, "J_nu", nu, x);
  finite_or_throw(out.y, "Y_nu", nu, x);
  finite_or_throw(out.yp, "Y'_nu", nu, x);
  return out;
}

BesselPair bessel_j_pair(double nu, double x) {
  check_order(nu);
  check_argument(x);
  if (x == 0.0) throw DomainError("bessel_j_pair needs x > 0");
  BesselPair out = pair_any_order(nu, x, false);
  finite_or_throw(out.j, "J_nu", nu, x);
  finite_or_throw(out.jp, "J'_nu", nu, x);
  out.y = 0.0;
  out.yp = 0.0;
  out.y_error = 0.0;
  return out;
}

EvalResult bessel_j(double nu, double x) {
  check_order(nu);
  check_argument(x);
  if (x == 0.0) {
    if (nu == 0.0) return {1.0, 0.0, EvalMethod::Series};
    if (nu > 0.0 || is_integer(nu)) return {0.0, 0.0, EvalMethod::Series};
    throw OverflowError("J_nu(0) diverges for negative non-integer order");
  }
  const BesselPair p = pair_any_order(nu, x, false);
  return {finite_or_throw(p.j, "J_nu", nu, x), p.j_error, p.method};
}

EvalResult bessel_j_prime(double nu, double x) {
  check_order(nu);
  check_argument(x);
  if (x == 0.0) {
    if (nu == 1.0) return {0.5, 0.0, EvalMethod::Series};
    if (nu == -1.0) return {-0.5, 0.0, EvalMethod::Series};
    if (nu == 0.0 || nu > 1.0) return {0.0, 0.0, EvalMethod::Series};
    throw DomainError("J'_nu(0) is only defined for nu = 0 or |nu| >= 1");
  }
  const BesselPair p = pair_any_order(nu, x, false);
  return {finite_or_throw(p.jp, "J'_nu", nu, x), derivative_error(p.j_error, nu, x), p.method};
}

EvalResult bessel_y(double nu, double x) {
  const BesselPair p = bessel_jy(nu, x);
  return {p.y, p.y_error, p.y_method};
}

EvalResult bessel_y_prime(double nu, double x) {
  const BesselPair p = bessel_jy(nu, x);
  return {p.yp, derivative_error(p.y_error, nu, x), p.y_method};
}

EvalResult bessel_j_scaled(double nu, double x) {
  check_order(nu);
  check_argument(x);
  if (!(nu > -1.0)) throw DomainError("scaled Bessel function requires nu > -1");
  if (x == 0.0) return {1.0, 0.0, EvalMethod::Series};
  if (series_regime(nu, x)) {
    const long double q = -0.25L * x * x;
    long double term = 1.0L;
    long double sum = 1.0L;
    long double abs_sum = 1.0L;
    for (int k = 1; k < kMaxIterations; ++k) {
      term *= q / (static_cast<long double>(k) * (nu + k));
      sum += term;
      abs_sum += std::fabs(term);
      if (-q < k * (nu + k) && std::fabs(term) <= kLongEps * 1e-3L * std::fabs(sum)) break;
    }
    const double v = static_cast<double>(sum);
    return {v, 2.0 * kEps * std::fabs(v) + static_cast<double>(64.0L * kLongEps * abs_sum),
            EvalMethod::Series};
  }
  const BesselPair p = pair_any_order(nu, x, false);
  const double f = scaled_factor(nu, x);
  const double v = f * p.j;
  return {finite_or_throw(v, "scaled J_nu", nu, x), f * p.j_error + 4.0 * kEps * std::fabs(v),
          p.method};
}

EvalResult bessel_j_scaled_prime(double nu, double x) {
  check_order(nu);
  check_argument(x);
  if (!(nu > -1.0)) throw DomainError("scaled Bessel function requires nu > -1");
  if (x == 0.0) return {0.0, 0.0, EvalMethod::Series};
  if (series_regime(nu, x)) {
    const long double q = -0.25L * x * x;
    long double term = 1.0L;
    long double sum = 0.0L;
    long double abs_sum = 0.0L;
    for (int k = 1; k < kMaxIterations; ++k) {
      term *= q / (static_cast<long double>(k) * (nu + k));
      const long double d = term * 2.0L * k / x;
      sum += d;
      abs_sum += std::fabs(d);
      if (-q < k * (nu + k) && std::fabs(d) <= kLongEps * 1e-3L * std::fabs(sum)) break;
    }
    const double v = static_cast<double>(sum);
    return {v, 2.0 * kEps * std::fabs(v) + static_cast<double>(64.0L * kLongEps * abs_sum),
            EvalMethod::Series};
  }
  const BesselPair p = pair_any_order(nu, x, false);
  const double f = scaled_factor(nu, x);
  const double v = f * (p.jp - nu / x * p.j);
  const double err = f * derivative_error(p.j_error, nu, x) + 4.0 * kEps * std::fabs(v);
  return {finite_or_throw(v, "scaled J'_nu", nu, x), err, p.method};
}

EvalResult cylinder(double alpha, double nu, double x) {
  if (!(alpha >= 0.0 && alpha < kPi)) throw DomainError("cylinder angle alpha must lie in [0, pi)");
  if (alpha == 0.0) return bessel_j(nu, x);
  const BesselPair p = bessel_jy(nu, x);
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const double v = c * p.j - s * p.y;
  const double err = std::fabs(c) * p.j_error + std::fabs(s) * p.y_error +
                     2.0 * kEps * (std::fabs(c * p.j) + std::fabs(s * p.y));
  return {v, err, p.method};
}

EvalResult cylinder_prime(double alpha, double nu, double x) {
  if (!(alpha >= 0.0 && alpha < kPi)) throw DomainError("cylinder angle alpha must lie in [0, pi)");
  if (alpha == 0.0) return bessel_j_prime(nu, x);
  const BesselPair p = bessel_jy(nu, x);
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const double v = c * p.jp - s * p.yp;
  const double err = derivative_error(std::fabs(c) * p.j_error + std::fabs(s) * p.y_error, nu, x) +
                     2.0 * kEps * (std::fabs(c * p.jp) + std::fabs(s * p.yp));
  return {v, err, p.method};
}

EvalResult modified_k0(double x) {
  if (std::isnan(x) || !(x > 0.0)) throw DomainError("K_0 requires x > 0");
  if (std::isinf(x)) return {0.0, 0.0, EvalMethod::Asymptotic};
  if (x <= 2.0) {
    const double q = 0.25 * x * x;
    double t = 1.0;
    double i0 = 1.0;
    double harmonic = 0.0;
    double s = 0.0;
    for (int k = 1; k < 200; ++k) {
      t *= q / (static_cast<double>(k) * k);
      harmonic += 1.0 / k;
      i0 += t;
      s += t * harmonic;
      if (t < 0.1 * kEps * i0) break;
    }
    const double lead = std::log(0.5 * x) + std::numbers::egamma;
    const double v = -lead * i0 + s;
    return {v, 8.0 * kEps * (std::fabs(lead) * i0 + s), EvalMethod::Series};
  }
  // Temme's CF2 for K_0 (Steed's algorithm).
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 1;
  for (; i < kMaxIterations; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    const double dels = q * delh;
    s += dels;
    if (std::fabs(dels / s) < kEps) break;
  }
  if (i == kMaxIterations) throw ConvergenceError("CF2 for K_0 did not converge");
  const double v = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
  return {v, (16.0 + 0.1 * i) * kEps * v, EvalMethod::ContinuedFraction};
}

double watson_integrand(double c, double nu, double u) {
  if (u <= 0.0) return std::numeric_limits<double>::infinity();
  const double root = std::sqrt(1.0 + u * u);
  return modified_k0(2.0 * c * u).value * std::exp(-2.0 * nu * std::asinh(u)) / root;
}

}  // namespace lommelkit
