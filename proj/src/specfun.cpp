#include "nash/specfun.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nash {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxTerms = 200;

// S(y; alpha) = sum_k (-1)^k y^k / (k! Gamma(k + alpha + 1)), so that
// J_alpha(z) = (z/2)^alpha S(z^2/4; alpha). Entire in y, which makes
// r^{-alpha} J_alpha(z r) a ratio of S values with no singularity at 0.
// Accumulated in long double; the alternating cancellation for z <= 30
// stays below the series tolerance that way.
long double scaled_series(double alpha, double y, int derivative_order) {
  long double term = std::exp(-std::lgamma(alpha + 1.0));
  long double sum = derivative_order == 0 ? term : 0.0L;
  for (int k = 1; k <= kMaxTerms; ++k) {
    term *= -static_cast<long double>(y) / (static_cast<long double>(k) * (k + alpha));
    long double contrib = term;
    if (derivative_order >= 1) contrib *= k;
    if (derivative_order == 2) contrib *= (k - 1);
    sum += contrib;
    if (std::abs(term) < 1e-16L * (std::abs(sum) + 1e-300L) && k > 4) break;
  }
  return sum;
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn: requires x > 0");
  return std::tgamma(x);
}

double ball_volume(double d) {
  if (!(d >= 1.0)) throw std::domain_error("ball_volume: requires d >= 1");
  return std::pow(kPi, 0.5 * d) / gamma_fn(0.5 * d + 1.0);
}

double bessel_j(double alpha, double z) {
  if (z < 0.0) throw std::domain_error("bessel_j: requires z >= 0");
  if (alpha < -0.5) throw std::domain_error("bessel_j: requires alpha >= -1/2");
  if (z == 0.0) {
    if (alpha == 0.0) return 1.0;
    if (alpha > 0.0) return 0.0;
    throw std::domain_error("bessel_j: alpha < 0 diverges at z = 0");
  }
  double y = 0.25 * z * z;
  long double s = scaled_series(alpha, y, 0);
  return static_cast<double>(std::pow(0.5L * z, (long double)alpha) * s);
}

double bessel_j_deriv(double alpha, double z) {
  if (z <= 0.0) throw std::domain_error("bessel_j_deriv: requires z > 0");
  // d/dz [(z/2)^a S(z^2/4)] = (a/z)(z/2)^a S + (z/2)^{a+1} S'.
  double y = 0.25 * z * z;
  long double s0 = scaled_series(alpha, y, 0);
  long double s1 = scaled_series(alpha, y, 1) / y;  // S'(y)
  long double za = std::pow(0.5L * z, (long double)alpha);
  return static_cast<double>(za * (alpha / z * s0 + 0.5L * z * s1));
}

double bessel_first_zero(double alpha) {
  if (alpha < -0.5 || alpha > 30.0)
    throw std::domain_error("bessel_first_zero: alpha outside [-1/2, 30]");
  const double lo0 = std::max(alpha, 0.5);
  const double hi0 = alpha + 10.0;
  const double step = 0.1;
  double a = lo0, fa = bessel_j(alpha, a);
  double b = 0.0, fb = 0.0;
  bool found = false;
  for (double x = lo0 + step; x <= hi0 + 0.5 * step; x += step) {
    b = std::min(x, hi0);
    fb = bessel_j(alpha, b);
    if (fa == 0.0) return a;
    if (fa * fb < 0.0) {
      found = true;
      break;
    }
    a = b;
    fa = fb;
  }
  if (!found)
    throw std::runtime_error("bessel_first_zero: no sign change in scan window");
  for (int i = 0; i < 80; ++i) {
    double m = 0.5 * (a + b);
    double fm = bessel_j(alpha, m);
    if (fm == 0.0) return m;
    if (fa * fm < 0.0) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

SpectralData spectral_data(double d) {
  if (!(d >= 1.0)) throw std::domain_error("spectral_data: requires d >= 1");
  static std::mutex mtx;
  static std::map<double, double> cache;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) {
      double z = it->second;
      return SpectralData{d, z, z * z, z};
    }
  }
  double z = bessel_first_zero(0.5 * d);
  {
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(d, z);
  }
  return SpectralData{d, z, z * z, z};
}

double phi1(int d, double r) {
  if (r < 0.0 || r > 1.0) throw std::domain_error("phi1: requires r in [0,1]");
  double alpha = 0.5 * (d - 2);
  double lam = spectral_data(d).lambda1;
  long double num = scaled_series(alpha, 0.25 * lam * r * r, 0);
  long double den = scaled_series(alpha, 0.25 * lam, 0);
  return static_cast<double>(num / den);
}

double phi1_deriv(int d, double r) {
  if (r < 0.0 || r > 1.0) throw std::domain_error("phi1_deriv: requires r in [0,1]");
  double alpha = 0.5 * (d - 2);
  double lam = spectral_data(d).lambda1;
  double y = 0.25 * lam * r * r;
  long double den = scaled_series(alpha, 0.25 * lam, 0);
  // d/dr S(lam r^2/4) = S'(y) * lam r / 2; S'(y) = scaled_series(.,1)/y.
  long double sp;
  if (y == 0.0) {
    sp = -std::exp(-std::lgamma(alpha + 2.0));  // S'(0) = -1/Gamma(alpha+2)
  } else {
    sp = scaled_series(alpha, y, 1) / y;
  }
  return static_cast<double>(sp * (0.5L * lam * r) / den);
}

double phi1_deriv2(int d, double r) {
  if (r < 0.0 || r > 1.0) throw std::domain_error("phi1_deriv2: requires r in [0,1]");
  double alpha = 0.5 * (d - 2);
  double lam = spectral_data(d).lambda1;
  double y = 0.25 * lam * r * r;
  long double den = scaled_series(alpha, 0.25 * lam, 0);
  long double sp, spp;
  if (y == 0.0) {
    sp = -std::exp(-std::lgamma(alpha + 2.0));
    spp = std::exp(-std::lgamma(alpha + 3.0));
  } else {
    sp = scaled_series(alpha, y, 1) / y;
    spp = scaled_series(alpha, y, 2) / (static_cast<long double>(y) * y);
  }
  long double dy = 0.5L * lam * r;
  return static_cast<double>((spp * dy * dy + sp * 0.5L * lam) / den);
}

RadialProfile optimal_profile(int d, int n_knots) {
  if (n_knots < 16) throw std::invalid_argument("optimal_profile: n_knots >= 16");
  RadialProfile u;
  u.d = d;
  u.knots.resize(n_knots);
  u.values.resize(n_knots);
  u.slopes.resize(n_knots);
  for (int i = 0; i < n_knots; ++i) {
    double r = static_cast<double>(i) / (n_knots - 1);
    u.knots[i] = r;
    u.values[i] = 1.0 - phi1(d, r);
    u.slopes[i] = -phi1_deriv(d, r);
  }
  u.values.back() = 0.0;  // phi1(1) = 1 by construction
  return u;
}

double nash_constant(double d) {
  if (!(d >= 1.0)) throw std::domain_error("nash_constant: requires d >= 1");
  double lam = spectral_data(d).lambda1;
  return std::pow(d + 2.0, 1.0 + 2.0 / d) /
         (d * lam * std::pow(2.0 * ball_volume(d), 2.0 / d));
}

}  // namespace nash
