#include "nash/shooting.hpp"

#include <cmath>
#include <algorithm>
#include <stdexcept>

namespace nash {

namespace {

// Right-hand side of the first-order system U' = V,
// V' = U^{p-1} - U - ((d-1)/r) V, with U clamped at 0 inside the
// sublinear power.
struct ElRhs {
  double p;
  int d;
  void operator()(double r, double u, double v, double& du, double& dv) const {
    double up = p == 1.0 ? 1.0 : std::pow(std::max(u, 0.0), p - 1.0);
    du = v;
    dv = up - u - (d - 1) / r * v;
  }
};

struct StepState {
  double r, u, v;
};

StepState rk4_step(const ElRhs& rhs, StepState s, double dt) {
  double k1u, k1v, k2u, k2v, k3u, k3v, k4u, k4v;
  rhs(s.r, s.u, s.v, k1u, k1v);
  rhs(s.r + 0.5 * dt, s.u + 0.5 * dt * k1u, s.v + 0.5 * dt * k1v, k2u, k2v);
  rhs(s.r + 0.5 * dt, s.u + 0.5 * dt * k2u, s.v + 0.5 * dt * k2v, k3u, k3v);
  rhs(s.r + dt, s.u + dt * k3u, s.v + dt * k3v, k4u, k4v);
  return StepState{s.r + dt, s.u + dt / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u),
                   s.v + dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)};
}

// Cubic Hermite value of U and V on [0, 1] between two states.
void hermite_eval(const StepState& a, const StepState& b, double theta, double& u,
                  double& v) {
  double dt = b.r - a.r;
  double h00 = (1 + 2 * theta) * (1 - theta) * (1 - theta);
  double h10 = theta * (1 - theta) * (1 - theta);
  double h01 = theta * theta * (3 - 2 * theta);
  double h11 = theta * theta * (theta - 1);
  u = h00 * a.u + h10 * dt * a.v + h01 * b.u + h11 * dt * b.v;
  // derivative of the Hermite cubic gives V consistent to fourth order
  double g00 = 6 * theta * (theta - 1);
  double g10 = (1 - theta) * (1 - 3 * theta);
  double g01 = -g00;
  double g11 = theta * (3 * theta - 2);
  v = (g00 * a.u + g01 * b.u) / dt + g10 * a.v + g11 * b.v;
}

StepState series_start(double p, int d, double h) {
  double r0 = 1e-4 * std::max(1.0, std::sqrt(static_cast<double>(d)));
  double c = (p == 1.0 ? 1.0 - h : std::pow(h, p - 1.0) - h);
  return StepState{r0, h + c * r0 * r0 / (2.0 * d), c * r0 / d};
}

// One pass at fixed step count; records the trajectory when requested.
Trajectory integrate_once(double p, int d, double h, double r_max, long steps,
                          double tol, bool record) {
  ElRhs rhs{p, d};
  Trajectory traj;
  StepState s = series_start(p, d, h);
  double dt = (r_max - s.r) / steps;
  if (record) {
    traj.r.reserve(steps + 1);
    traj.u.reserve(steps + 1);
    traj.v.reserve(steps + 1);
    traj.r.push_back(s.r);
    traj.u.push_back(s.u);
    traj.v.push_back(s.v);
  }
  for (long i = 0; i < steps; ++i) {
    StepState next = rk4_step(rhs, s, dt);
    if (!std::isfinite(next.u) || !std::isfinite(next.v))
      throw std::runtime_error("integrate_el: non-finite state (step too large)");
    if (next.u <= 0.0) {
      // locate the crossing on the Hermite interpolant
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi), um, vm;
        hermite_eval(s, next, mid, um, vm);
        (um > 0.0 ? lo : hi) = mid;
      }
      double um, vm;
      double theta = 0.5 * (lo + hi);
      hermite_eval(s, next, theta, um, vm);
      traj.event = Event::hit_zero;
      traj.r_end = s.r + theta * dt;
      traj.u_end = 0.0;
      traj.v_end = vm;
      if (record) {
        traj.r.push_back(traj.r_end);
        traj.u.push_back(0.0);
        traj.v.push_back(vm);
      }
      return traj;
    }
    if (s.v < 0.0 && next.v >= 0.0) {
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi), um, vm;
        hermite_eval(s, next, mid, um, vm);
        (vm < 0.0 ? lo : hi) = mid;
      }
      double um, vm;
      double theta = 0.5 * (lo + hi);
      hermite_eval(s, next, theta, um, vm);
      // a minimum at the noise floor is a tangential touchdown, not an
      // interior turning point
      bool touchdown = um <= 10.0 * tol;
      traj.event = touchdown ? Event::hit_zero : Event::slope_zero;
      traj.r_end = s.r + theta * dt;
      traj.u_end = touchdown ? 0.0 : um;
      traj.v_end = 0.0;
      if (record) {
        traj.r.push_back(traj.r_end);
        traj.u.push_back(traj.u_end);
        traj.v.push_back(0.0);
      }
      return traj;
    }
    s = next;
    if (record) {
      traj.r.push_back(s.r);
      traj.u.push_back(s.u);
      traj.v.push_back(s.v);
    }
  }
  traj.event = Event::max_radius;
  traj.r_end = s.r;
  traj.u_end = s.u;
  traj.v_end = s.v;
  return traj;
}

double exponent_ratio(double p, int d) {  // a/b = d(2-p)/(2p)
  return d * (2.0 - p) / (2.0 * p);
}

// Forward pass that stops once u falls to u_floor; returns the matching
// state located on the Hermite interpolant.
StepState forward_to_floor(double p, int d, double h, double u_floor, long steps,
                           double r_max) {
  ElRhs rhs{p, d};
  StepState s = series_start(p, d, h);
  double dt = (r_max - s.r) / steps;
  for (long i = 0; i < steps; ++i) {
    StepState next = rk4_step(rhs, s, dt);
    if (next.u <= u_floor) {
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi), um, vm;
        hermite_eval(s, next, mid, um, vm);
        (um > u_floor ? lo : hi) = mid;
      }
      double um, vm, theta = 0.5 * (lo + hi);
      hermite_eval(s, next, theta, um, vm);
      return StepState{s.r + theta * dt, um, vm};
    }
    s = next;
  }
  throw std::runtime_error("shoot: trajectory never reached the matching level");
}

// Touchdown tail below the matching level. The substitution
// tau = u^{(2-p)/2} regularizes the degenerate contact u ~ (R-r)^{2/(2-p)}:
// with g = v^2 / u^p the system
//   d sigma / d tau = -(2/(2-p)) / sqrt(g)
//   d g / d tau     = (2/((2-p) tau))(2 - p g)
//                     + (4/(2-p)) ((d-1) sqrt(g)/(r0 + sigma) - tau)
// is smooth down to tau = 0 (g -> 2/p there), and in d = 1 it integrates
// the zero-energy first integral exactly.
struct TailCurve {
  std::vector<double> sigma, u, v;  // sigma increasing from 0 at u = u0
  double s0 = 0.0;                  // total tail length
};

// Integrating down from the matching state is ill conditioned: the shooting
// bracket leaves the forward trajectory off the separatrix by ~1e-13 h, and
// in the flat tail that offset is amplified without bound. Instead integrate
// the touchdown branch itself upward from tau = 0, where g(0) = 2/p; in that
// direction transversal perturbations decay like tau^{-2p/(2-p)}, so the
// tail is recovered to integrator accuracy. The touchdown radius enters the
// friction term, so the curve is refined by a short fixed-point iteration.
TailCurve integrate_tail(double p, int d, double r0, double u0) {
  const double ex = 2.0 / (2.0 - p);
  const double tau0 = std::pow(u0, 1.0 / ex);
  // zero-energy length as the initial guess for the tail extent
  double s0 = 2.0 / (2.0 - p) * std::asin(std::min(1.0, tau0 * std::sqrt(0.5 * p)));
  TailCurve curve;
  const long n = 8192;
  for (int pass = 0; pass < 3; ++pass) {
    double R = r0 + s0;
    auto rhs = [&](double tau, double zeta, double g, double& dz, double& dg) {
      double sg = std::sqrt(std::max(g, 1e-300));
      dz = (2.0 / (2.0 - p)) / sg;
      dg = 2.0 / ((2.0 - p) * tau) * (2.0 - p * g) +
           4.0 / (2.0 - p) * ((d - 1) * sg / std::max(R - zeta, 1e-12) - tau);
    };
    // two-term series start just above the contact point
    double tau = tau0 * 1e-5;
    double g1 = 4.0 * (d - 1) * std::sqrt(2.0 / p) / ((2.0 + p) * R);
    double zp0 = (2.0 / (2.0 - p)) * std::sqrt(0.5 * p);
    double f1 = 4.0 * (d - 1) / (2.0 - p) *
                (g1 / (2.0 * std::sqrt(2.0 / p)) / R + std::sqrt(2.0 / p) * zp0 / (R * R));
    double g2 = 0.25 * (2.0 - p) * (f1 - 4.0 / (2.0 - p));
    double g = 2.0 / p + g1 * tau + g2 * tau * tau;
    double zeta = zp0 * tau;
    // geometric mesh: the 1/tau factor in dg/dtau calls for steps ~ tau
    double q = std::pow(tau0 / tau, 1.0 / n);
    curve.sigma.clear();
    curve.u.clear();
    curve.v.clear();
    auto push = [&]() {  // zeta measured from the touchdown point
      double u = std::pow(tau, ex);
      curve.sigma.push_back(zeta);
      curve.u.push_back(u);
      curve.v.push_back(-std::sqrt(std::max(g, 0.0)) * std::pow(u, 0.5 * p));
    };
    curve.sigma.push_back(0.0);
    curve.u.push_back(0.0);
    curve.v.push_back(0.0);
    push();
    for (long i = 0; i < n; ++i) {
      double tau_next = (i + 1 == n) ? tau0 : tau * q;
      double dtau = tau_next - tau;
      double k1z, k1g, k2z, k2g, k3z, k3g, k4z, k4g;
      rhs(tau, zeta, g, k1z, k1g);
      rhs(tau + 0.5 * dtau, zeta + 0.5 * dtau * k1z, g + 0.5 * dtau * k1g, k2z, k2g);
      rhs(tau + 0.5 * dtau, zeta + 0.5 * dtau * k2z, g + 0.5 * dtau * k2g, k3z, k3g);
      rhs(tau + dtau, zeta + dtau * k3z, g + dtau * k3g, k4z, k4g);
      zeta += dtau / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z);
      g += dtau / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
      tau = tau_next;
      push();
    }
    s0 = zeta;
    if (d == 1) break;  // no friction: nothing to iterate on
  }
  curve.s0 = s0;
  // reorient: sigma measured from the matching radius, increasing
  for (auto& sg : curve.sigma) sg = s0 - sg;
  std::reverse(curve.sigma.begin(), curve.sigma.end());
  std::reverse(curve.u.begin(), curve.u.end());
  std::reverse(curve.v.begin(), curve.v.end());
  return curve;
}

// Interpolate u, v on the tail curve at a given sigma (curve is monotone).
void tail_interp(const TailCurve& c, double sigma, double& u, double& v) {
  if (sigma >= c.s0) {
    u = 0.0;
    v = 0.0;
    return;
  }
  std::size_t lo = 0, hi = c.sigma.size() - 1;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    (c.sigma[mid] <= sigma ? lo : hi) = mid;
  }
  double theta = (sigma - c.sigma[lo]) / (c.sigma[hi] - c.sigma[lo]);
  u = (1.0 - theta) * c.u[lo] + theta * c.u[hi];
  v = (1.0 - theta) * c.v[lo] + theta * c.v[hi];
}

}  // namespace

Trajectory integrate_el(double p, int d, double h, double r_max, double tol) {
  if (!(h > 1.0)) throw std::invalid_argument("integrate_el: requires h > 1");
  if (!(p >= 1.0 && p < 2.0)) throw std::invalid_argument("integrate_el: p in [1,2)");
  long steps = 2048;
  Trajectory coarse = integrate_once(p, d, h, r_max, steps, tol, false);
  for (int level = 0; level < 8; ++level) {
    steps *= 2;
    Trajectory fine = integrate_once(p, d, h, r_max, steps, tol, false);
    double diff = std::abs(fine.r_end - coarse.r_end) +
                  std::abs(fine.u_end - coarse.u_end) +
                  std::abs(fine.v_end - coarse.v_end);
    if (fine.event == coarse.event && diff < tol) {
      return integrate_once(p, d, h, r_max, steps, tol, true);
    }
    coarse = fine;
  }
  return integrate_once(p, d, h, r_max, steps, tol, true);
}

NormTriple norms_from_mu(double p, int d, double mu) {
  if (!(mu > 0.0)) throw std::invalid_argument("norms_from_mu: mu > 0");
  if (!(p >= 1.0 && p < 2.0)) throw std::invalid_argument("norms_from_mu: p in [1,2)");
  double ab = exponent_ratio(p, d);
  double P = std::pow(mu, p / (p - 2.0));
  return NormTriple{ab * P, P, (1.0 + ab) * P};
}

std::pair<double, double> pohozaev_residuals(double p, int d, const NormTriple& n) {
  if (!(n.l2_sq > 0.0)) throw std::invalid_argument("pohozaev_residuals: zero triple");
  double res1 = (n.grad_sq + n.lp_pow - n.l2_sq) / n.l2_sq;
  double res2 = ((d - 2.0) / (2.0 * d) * n.grad_sq + n.lp_pow / p - 0.5 * n.l2_sq) /
                n.l2_sq;
  return {res1, res2};
}

ShootingResult shoot(double p, int d, double tol) {
  if (!(p > 1.0 && p < 2.0)) throw std::invalid_argument("shoot: p in (1,2)");
  if (d < 1 || d > 10) throw std::invalid_argument("shoot: d in [1,10]");

  const double r_max = 80.0;
  const double itol = std::min(tol, 1e-9);
  auto classify = [&](double h) { return integrate_once(p, d, h, r_max, 1 << 15, itol, false); };

  // lower end of the bracket: barely above the u = 1 equilibrium
  double h_lo = 1.0 + 1e-6;
  Trajectory t_lo = classify(h_lo);
  if (t_lo.event != Event::slope_zero)
    throw std::runtime_error("shoot: lower seed is not an undershoot");

  double h_hi = 50.0;
  Trajectory t_hi = classify(h_hi);
  while (!(t_hi.event == Event::hit_zero && t_hi.v_end < -std::sqrt(itol))) {
    h_hi *= 2.0;
    if (h_hi > 800.0) throw std::runtime_error("shoot: no overshoot up to h = 800");
    t_hi = classify(h_hi);
  }

  for (int i = 0; i < 200 && (h_hi - h_lo) > 1e-13 * h_hi; ++i) {
    double mid = 0.5 * (h_lo + h_hi);
    Trajectory t_mid = classify(mid);
    if (t_mid.event == Event::hit_zero) {
      h_hi = mid;
      t_hi = t_mid;
    } else {
      h_lo = mid;
    }
  }

  ShootingResult out;
  out.p = p;
  out.d = d;
  out.h = 0.5 * (h_lo + h_hi);

  // The crossing radius of the overshoot trajectory converges to the support
  // radius only like (h - h_lo)^{(2-p)/2}, which is hopeless for p near 2.
  // Instead, follow the slightly-supercritical trajectory down to a matching
  // level u0 and finish with the contact-adapted tail integrator, which is
  // well conditioned straight through the tangential touchdown.
  const double u_match = 1e-2 * out.h;
  StepState match = forward_to_floor(p, d, h_hi, u_match, 1 << 16, r_max);
  TailCurve tail = integrate_tail(p, d, match.r, match.u);
  out.R = match.r + tail.s0;

  // Resample the touchdown trajectory on a uniform grid of the support.
  const int n_knots = 4097;
  RadialProfile prof;
  prof.d = d;
  prof.knots.resize(n_knots);
  prof.values.resize(n_knots);
  prof.slopes.resize(n_knots);
  ElRhs rhs{p, d};
  StepState s = series_start(p, d, out.h);
  double dt_grid = out.R / (n_knots - 1);
  prof.knots[0] = 0.0;
  prof.values[0] = out.h;
  prof.slopes[0] = 0.0;
  // refine each grid cell with substeps so the resampled profile keeps
  // the integrator's accuracy; hand off to the tail curve past the
  // matching radius, where the forward solution is no longer trustworthy
  const int substeps = 8;
  int idx = 1;
  while (idx < n_knots) {
    double target = idx * dt_grid;
    if (target >= match.r) break;
    double dt = (target - s.r) / substeps;
    for (int k = 0; k < substeps; ++k) s = rk4_step(rhs, s, dt);
    prof.knots[idx] = target;
    prof.values[idx] = std::max(s.u, 0.0);
    prof.slopes[idx] = s.u > 0.0 ? s.v : 0.0;
    ++idx;
  }
  while (idx < n_knots) {
    double target = idx * dt_grid;
    double u, v;
    tail_interp(tail, target - match.r, u, v);
    prof.knots[idx] = target;
    prof.values[idx] = u;
    prof.slopes[idx] = v;
    ++idx;
  }
  prof.values.back() = 0.0;
  prof.slopes.back() = 0.0;
  out.profile = prof;

  out.norms = norm_triple(prof, p);
  out.mu = std::pow(out.norms.lp_pow, (p - 2.0) / p);
  auto res = pohozaev_residuals(p, d, out.norms);
  out.res1 = res.first;
  out.res2 = res.second;
  return out;
}

std::vector<SweepRow> sweep_p(int d, const std::vector<double>& p_list, double tol) {
  std::vector<SweepRow> rows;
  rows.reserve(p_list.size());
  for (double p : p_list) {
    ShootingResult r = shoot(p, d, tol);
    rows.push_back(SweepRow{p, r.h, r.R, r.mu, gn_quotient(r.profile, p)});
  }
  return rows;
}

}  // namespace nash
