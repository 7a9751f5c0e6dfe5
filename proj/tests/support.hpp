// Test-only helpers: oracle quadrature and profile utilities kept
// independent of the library's integration paths.
#ifndef NASH_TESTS_SUPPORT_HPP
#define NASH_TESTS_SUPPORT_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "nash/radial.hpp"
#include "nash/specfun.hpp"

namespace nash_test {

// Tanh-sinh quadrature on (a, b); robust to integrable endpoint
// singularities, which the first-integral oracle has at both ends.
inline double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  const double pi2 = 1.5707963267948966;
  double c = 0.5 * (b - a), m = 0.5 * (a + b);
  auto eval = [&](double t) {
    double s = std::sinh(t);
    double w = pi2 * std::cosh(t) / std::pow(std::cosh(pi2 * s), 2);
    if (w < 1e-300) return 0.0;
    // evaluate as an offset from the nearer endpoint: forming m + c*tanh(..)
    // directly rounds to the endpoint and silently drops integrable
    // singularities there
    double gap = 2.0 * c / (1.0 + std::exp(2.0 * pi2 * std::abs(s)));
    if (gap <= 0.0) return 0.0;
    double xx = t >= 0.0 ? b - gap : a + gap;
    double v = f(xx);
    return std::isfinite(v) ? v * w : 0.0;
  };
  const double t_max = 6.0;
  double h = 1.0;
  double sum = eval(0.0);
  for (int k = 1; k * h <= t_max; ++k) sum += eval(k * h) + eval(-k * h);
  double integral = c * h * sum;
  for (int level = 0; level < 14; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (double t = h; t <= t_max; t += 2.0 * h) add += eval(t) + eval(-t);
    double next = 0.5 * integral + c * h * add;
    if (level > 2 && std::abs(next - integral) < tol * std::abs(next) + 1e-300) {
      return next;
    }
    integral = next;
  }
  return integral;
}

// Linear interpolation of a radial profile, zero beyond the support.
inline double interp(const nash::RadialProfile& u, double r) {
  if (r >= u.support_radius()) return 0.0;
  double h = u.support_radius() / (u.knots.size() - 1);
  std::size_t i = static_cast<std::size_t>(r / h);
  if (i + 1 >= u.knots.size()) return u.values.back();
  double theta = (r - u.knots[i]) / h;
  return (1.0 - theta) * u.values[i] + theta * u.values[i + 1];
}

// L2 distance over R^d between two radial profiles extended by zero.
inline double l2_distance(const nash::RadialProfile& a, const nash::RadialProfile& b) {
  double R = std::max(a.support_radius(), b.support_radius());
  const int n = 1 << 14;
  double h = R / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    double r = i * h;
    double diff = interp(a, r) - interp(b, r);
    double w = (i == 0 || i == n) ? 0.5 : 1.0;
    acc += w * diff * diff * std::pow(r, a.d - 1);
  }
  double d_omega = a.d * nash::ball_volume(a.d);
  return std::sqrt(d_omega * acc * h);
}

// Ground-state center height in d = 1 from the zero-energy first integral.
inline double h_star_1d(double p) { return std::pow(2.0 / p, 1.0 / (2.0 - p)); }

// Support radius oracle in d = 1: R = int_0^h du / sqrt(2 u^p / p - u^2).
inline double support_radius_1d(double p) {
  double h = h_star_1d(p);
  return tanh_sinh(
      [&](double u) { return 1.0 / std::sqrt(2.0 * std::pow(u, p) / p - u * u); },
      0.0, h, 1e-12);
}

}  // namespace nash_test

#endif
