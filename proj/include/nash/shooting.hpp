#ifndef NASH_SHOOTING_HPP
#define NASH_SHOOTING_HPP

#include <utility>
#include <vector>

#include "nash/radial.hpp"

namespace nash {

enum class Event { hit_zero, slope_zero, max_radius };

/// One radial integration of u'' + ((d-1)/r) u' + u - u^{p-1} = 0 from a
/// series start at the center. Terminates at the first of: u crosses 0
/// (hit_zero), u' crosses 0 from below while u > 0 (slope_zero), or
/// r = r_max.
struct Trajectory {
  std::vector<double> r, u, v;
  Event event = Event::max_radius;
  double r_end = 0.0, u_end = 0.0, v_end = 0.0;
};

Trajectory integrate_el(double p, int d, double h, double r_max, double tol);

/// Certified ground state: center height h, support radius R, sampled
/// profile, mu = |u|_p^{p-2}, quadrature norms and the two Pohozaev
/// residuals (relative, against |u|_2^2).
struct ShootingResult {
  double p;
  int d;
  double h;
  double R;
  RadialProfile profile;
  double mu;
  NormTriple norms;
  double res1, res2;
};

ShootingResult shoot(double p, int d, double tol = 1e-10);

// Closed-form norms of the ground state from mu alone:
// P = mu^{p/(p-2)}, G = (a/b) P, M = (1 + a/b) P.
NormTriple norms_from_mu(double p, int d, double mu);

// res1 = (G + P - M)/M, res2 = (((d-2)/(2d)) G + P/p - M/2)/M.
std::pair<double, double> pohozaev_residuals(double p, int d, const NormTriple& n);

struct SweepRow {
  double p, h, R, mu, cgn;
};

std::vector<SweepRow> sweep_p(int d, const std::vector<double>& p_list,
                              double tol = 1e-10);

}  // namespace nash

#endif
