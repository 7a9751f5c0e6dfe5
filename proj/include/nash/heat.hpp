#ifndef NASH_HEAT_HPP
#define NASH_HEAT_HPP

#include <vector>

#include "nash/radial.hpp"

namespace nash {

struct DecaySample {
  double t;
  double l2;
  double nash_env;
  double young_env;
};

// G(t, x) = (4 pi t)^{-d/2} exp(-|x|^2 / (4t)) at |x| = rho.
double heat_kernel(double t, double rho, int d);

// (|u0|_2^{-4/d} + (4/d) C_Nash^{-1} |u0|_1^{-4/d} t)^{-d/4}.
double nash_envelope(double t, double l2_0, double l1_0, int d);

// (8 pi t)^{-d/4} |u0|_1.
double young_envelope(double t, double l1_0, int d);

// u0 = G(eps, .) evolves to G(t + eps, .); everything in closed form.
DecaySample evolve_gaussian(double eps, double t, int d);

/// Symmetric uniform 1-d grid function on [-half_width, half_width].
struct Grid1D {
  std::vector<double> x;
  std::vector<double> f;
  double trapezoid_l1() const;
  double trapezoid_l2() const;
};

Grid1D profile_to_grid(const RadialProfile& u0, double half_width, int n);

// Quadrature convolution with the heat kernel (trapezoid in y).
Grid1D convolve_heat(const Grid1D& g, double t);

DecaySample evolve_convolution_1d(const RadialProfile& u0, double t,
                                  double half_width, int n);

/// Compares 2 |grad u0|_2^2 with the t = 0 slope of the Nash envelope
/// for u0 the optimizer; rel_gap vanishes exactly in the equality case.
struct SharpnessReport {
  double lhs;
  double rhs;
  double rel_gap;
};

SharpnessReport t0_sharpness_check(int d);

struct CrossoverResult {
  bool exists = false;
  double t_star = 0.0;
  bool young_dominates_late = false;
};

// Unique t with nash_envelope = young_envelope, by bisection in log t.
CrossoverResult crossover(int d, double l1_0, double l2_0);

}  // namespace nash

#endif
