#include "nash/heat.hpp"

#include <cmath>
#include <stdexcept>

#include "nash/specfun.hpp"

namespace nash {

namespace {
constexpr double kPi = 3.14159265358979323846;

double interp_radial(const RadialProfile& u, double rho) {
  if (rho >= u.support_radius()) return 0.0;
  double h = u.support_radius() / (u.knots.size() - 1);
  std::size_t i = static_cast<std::size_t>(rho / h);
  if (i + 1 >= u.knots.size()) return u.values.back();
  double theta = (rho - u.knots[i]) / h;
  if (u.has_slopes()) {
    // cubic Hermite keeps the L1/L2 quadratures at grid order
    double h00 = (1 + 2 * theta) * (1 - theta) * (1 - theta);
    double h10 = theta * (1 - theta) * (1 - theta);
    double h01 = theta * theta * (3 - 2 * theta);
    double h11 = theta * theta * (theta - 1);
    return h00 * u.values[i] + h10 * h * u.slopes[i] + h01 * u.values[i + 1] +
           h11 * h * u.slopes[i + 1];
  }
  return (1.0 - theta) * u.values[i] + theta * u.values[i + 1];
}

}  // namespace

double Grid1D::trapezoid_l1() const {
  double h = (x.back() - x.front()) / (x.size() - 1);
  double s = 0.5 * (std::abs(f.front()) + std::abs(f.back()));
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += std::abs(f[i]);
  return h * s;
}

double Grid1D::trapezoid_l2() const {
  double h = (x.back() - x.front()) / (x.size() - 1);
  double s = 0.5 * (f.front() * f.front() + f.back() * f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i] * f[i];
  return std::sqrt(h * s);
}

double heat_kernel(double t, double rho, int d) {
  if (!(t > 0.0)) throw std::domain_error("heat_kernel: requires t > 0");
  return std::pow(4.0 * kPi * t, -0.5 * d) * std::exp(-rho * rho / (4.0 * t));
}

double nash_envelope(double t, double l2_0, double l1_0, int d) {
  if (!(l2_0 > 0.0 && l1_0 > 0.0))
    throw std::invalid_argument("nash_envelope: positive initial norms");
  double c = nash_constant(d);
  double base = std::pow(l2_0, -4.0 / d) +
                4.0 / d / c * std::pow(l1_0, -4.0 / d) * t;
  return std::pow(base, -0.25 * d);
}

double young_envelope(double t, double l1_0, int d) {
  if (!(t > 0.0)) throw std::domain_error("young_envelope: requires t > 0");
  return std::pow(8.0 * kPi * t, -0.25 * d) * l1_0;
}

DecaySample evolve_gaussian(double eps, double t, int d) {
  if (!(eps > 0.0)) throw std::invalid_argument("evolve_gaussian: eps > 0");
  DecaySample s;
  s.t = t;
  s.l2 = std::pow(8.0 * kPi * (t + eps), -0.25 * d);
  double l2_0 = std::pow(8.0 * kPi * eps, -0.25 * d);
  s.nash_env = nash_envelope(t, l2_0, 1.0, d);
  s.young_env = t > 0.0 ? young_envelope(t, 1.0, d) : l2_0;
  return s;
}

Grid1D profile_to_grid(const RadialProfile& u0, double half_width, int n) {
  if (u0.d != 1) throw std::invalid_argument("profile_to_grid: d = 1 only");
  Grid1D g;
  g.x.resize(n);
  g.f.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = -half_width + 2.0 * half_width * i / (n - 1);
    g.x[i] = x;
    g.f[i] = interp_radial(u0, std::abs(x));
  }
  return g;
}

Grid1D convolve_heat(const Grid1D& g, double t) {
  if (!(t > 0.0)) throw std::domain_error("convolve_heat: requires t > 0");
  int n = static_cast<int>(g.x.size());
  double h = (g.x.back() - g.x.front()) / (n - 1);
  // restrict the y sum to where the source is nonzero
  int lo = 0, hi = n - 1;
  while (lo < n && g.f[lo] == 0.0) ++lo;
  while (hi > 0 && g.f[hi] == 0.0) --hi;
  if (lo > 0) --lo;
  if (hi < n - 1) ++hi;
  Grid1D out;
  out.x = g.x;
  out.f.assign(n, 0.0);
  double norm = 1.0 / std::sqrt(4.0 * kPi * t);
  double inv4t = 1.0 / (4.0 * t);
  for (int i = 0; i < n; ++i) {
    double xi = g.x[i];
    double acc = 0.0;
    for (int j = lo; j <= hi; ++j) {
      double z = xi - g.x[j];
      double w = (j == lo || j == hi) ? 0.5 : 1.0;
      acc += w * g.f[j] * std::exp(-z * z * inv4t);
    }
    out.f[i] = acc * h * norm;
  }
  return out;
}

DecaySample evolve_convolution_1d(const RadialProfile& u0, double t,
                                  double half_width, int n) {
  if (u0.d != 1) throw std::invalid_argument("evolve_convolution_1d: d = 1 only");
  double R = u0.support_radius();
  if (!(half_width >= R + 6.0 * std::sqrt(t)))
    throw std::invalid_argument("evolve_convolution_1d: half_width < R + 6 sqrt(t)");
  // tail mass beyond the window, relative to |u0|_1
  double tail = std::erfc((half_width - R) / (2.0 * std::sqrt(t)));
  if (tail > 1e-10)
    throw std::invalid_argument("evolve_convolution_1d: insufficient half_width");
  Grid1D g0 = profile_to_grid(u0, half_width, n);
  Grid1D gt = convolve_heat(g0, t);
  DecaySample s;
  s.t = t;
  s.l2 = gt.trapezoid_l2();
  double l1_0 = g0.trapezoid_l1();
  double l2_0 = g0.trapezoid_l2();
  s.nash_env = nash_envelope(t, l2_0, l1_0, 1);
  s.young_env = young_envelope(t, l1_0, 1);
  return s;
}

SharpnessReport t0_sharpness_check(int d) {
  // the equality case lives at the natural scale: u0(x) = ubar(x / R1)
  RadialProfile u0 = optimal_profile(d, 4097);
  double R1 = spectral_data(d).R1;
  for (auto& r : u0.knots) r *= R1;
  for (auto& s : u0.slopes) s /= R1;
  double g = grad_l2_sq(u0);
  double l1 = lp_norm(u0, 1.0);
  double l2 = lp_norm(u0, 2.0);
  double m = l2 * l2;
  SharpnessReport rep;
  rep.lhs = 2.0 * g;
  rep.rhs = 2.0 / nash_constant(d) * std::pow(l1, -4.0 / d) *
            std::pow(m, 1.0 + 2.0 / d);
  rep.rel_gap = std::abs(rep.rhs - rep.lhs) / rep.lhs;
  return rep;
}

CrossoverResult crossover(int d, double l1_0, double l2_0) {
  CrossoverResult out;
  auto diff = [&](double t) {
    return nash_envelope(t, l2_0, l1_0, d) - young_envelope(t, l1_0, d);
  };
  // the Young envelope diverges as t -> 0, so diff < 0 there; a crossing
  // exists iff the Nash envelope eventually dips below the Young one
  out.young_dominates_late =
      8.0 * kPi > 4.0 / (d * nash_constant(d));
  double lo = 1e-12, hi = 1e12;
  if (diff(lo) >= 0.0 || diff(hi) <= 0.0) {
    out.exists = false;
    return out;
  }
  for (int i = 0; i < 200; ++i) {
    double mid = std::sqrt(lo * hi);
    (diff(mid) < 0.0 ? lo : hi) = mid;
  }
  out.exists = true;
  out.t_star = std::sqrt(lo * hi);
  return out;
}

}  // namespace nash
