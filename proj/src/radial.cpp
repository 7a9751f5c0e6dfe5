#include "nash/radial.hpp"

#include <cmath>
#include <stdexcept>

#include "nash/specfun.hpp"

namespace nash {

namespace {

void validate(const RadialProfile& u) {
  if (u.knots.size() < 2) throw std::invalid_argument("profile: fewer than 2 knots");
  if (u.knots.size() != u.values.size())
    throw std::invalid_argument("profile: knots/values size mismatch");
  if (u.knots.front() != 0.0) throw std::invalid_argument("profile: first knot must be 0");
  for (std::size_t i = 1; i < u.knots.size(); ++i)
    if (!(u.knots[i] > u.knots[i - 1]))
      throw std::invalid_argument("profile: knots not strictly increasing");
}

}  // namespace

double integrate_uniform(const std::vector<double>& r, const std::vector<double>& f) {
  std::size_t n = r.size();
  if (n < 2 || f.size() != n) throw std::invalid_argument("integrate_uniform: bad grid");
  double h = (r.back() - r.front()) / (n - 1);
  std::size_t m = n - 1;  // interval count
  if (m == 1) return 0.5 * h * (f[0] + f[1]);
  double total = 0.0;
  std::size_t simpson_end = m;  // index of last point covered by Simpson
  if (m % 2 != 0) {
    if (m == 3) {
      return 3.0 * h / 8.0 * (f[0] + 3.0 * f[1] + 3.0 * f[2] + f[3]);
    }
    simpson_end = m - 3;
    // Simpson 3/8 patch on the trailing three intervals keeps order 4.
    total += 3.0 * h / 8.0 *
             (f[m - 3] + 3.0 * f[m - 2] + 3.0 * f[m - 1] + f[m]);
  }
  double s = f[0] + f[simpson_end];
  for (std::size_t i = 1; i < simpson_end; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
  total += h / 3.0 * s;
  return total;
}

std::vector<double> finite_difference_slopes(const std::vector<double>& r,
                                             const std::vector<double>& u) {
  std::size_t n = r.size();
  std::vector<double> du(n);
  if (n < 3) {
    double s = (u[1] - u[0]) / (r[1] - r[0]);
    du[0] = du[1] = s;
    return du;
  }
  double h = (r.back() - r.front()) / (n - 1);
  du[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) du[i] = (u[i + 1] - u[i - 1]) / (2.0 * h);
  du[n - 1] = (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) / (2.0 * h);
  return du;
}

double lp_norm(const RadialProfile& u, double q) {
  validate(u);
  if (!(q >= 1.0)) throw std::invalid_argument("lp_norm: requires q >= 1");
  std::size_t n = u.knots.size();
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i)
    f[i] = std::pow(std::abs(u.values[i]), q) * std::pow(u.knots[i], u.d - 1);
  double integral = u.d * ball_volume(u.d) * integrate_uniform(u.knots, f);
  return std::pow(integral, 1.0 / q);
}

double grad_l2_sq(const RadialProfile& u) {
  validate(u);
  std::vector<double> fallback;
  if (!u.has_slopes()) fallback = finite_difference_slopes(u.knots, u.values);
  const std::vector<double>& du = u.has_slopes() ? u.slopes : fallback;
  std::size_t n = u.knots.size();
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i)
    f[i] = du[i] * du[i] * std::pow(u.knots[i], u.d - 1);
  return u.d * ball_volume(u.d) * integrate_uniform(u.knots, f);
}

NormTriple norm_triple(const RadialProfile& u, double p) {
  NormTriple t;
  t.grad_sq = grad_l2_sq(u);
  double lp = lp_norm(u, p);
  t.lp_pow = std::pow(lp, p);
  double l2 = lp_norm(u, 2.0);
  t.l2_sq = l2 * l2;
  return t;
}

double nash_quotient(const RadialProfile& u) {
  double g = grad_l2_sq(u);
  if (!(g > 0.0)) throw std::domain_error("nash_quotient: zero gradient");
  double l1 = lp_norm(u, 1.0);
  double l2 = lp_norm(u, 2.0);
  double m = l2 * l2;
  return std::pow(m, 1.0 + 2.0 / u.d) / (std::pow(l1, 4.0 / u.d) * g);
}

double gn_quotient(const RadialProfile& u, double p) {
  if (!(p >= 1.0 && p < 2.0)) throw std::invalid_argument("gn_quotient: p in [1,2)");
  double g = grad_l2_sq(u);
  double lp = lp_norm(u, p);
  double l2 = lp_norm(u, 2.0);
  double m = l2 * l2;
  if (!(m > 0.0)) throw std::domain_error("gn_quotient: zero profile");
  double a = u.d * (2.0 - p);
  double b = 2.0 * p;
  return std::pow(g, a / (a + b)) * std::pow(lp, 2.0 * b / (a + b)) / m;
}

}  // namespace nash
