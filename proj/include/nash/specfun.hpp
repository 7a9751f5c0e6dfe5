#ifndef NASH_SPECFUN_HPP
#define NASH_SPECFUN_HPP

#include "nash/radial.hpp"

namespace nash {

/// First Neumann eigenvalue data of the unit ball: z is the smallest
/// positive zero of J_{d/2}, lambda1 = z^2 and R1 = sqrt(lambda1) = z.
struct SpectralData {
  double d;
  double z;
  double lambda1;
  double R1;
};

// Euler Gamma on x > 0.
double gamma_fn(double x);

// Volume of the unit ball, omega_d = pi^{d/2} / Gamma(d/2 + 1).
double ball_volume(double d);

// Bessel function of the first kind J_alpha(z), ascending series,
// valid for alpha >= -1/2 and 0 <= z <= 30.
double bessel_j(double alpha, double z);

// d/dz J_alpha(z), series differentiated term by term.
double bessel_j_deriv(double alpha, double z);

// Smallest positive zero of J_alpha, alpha in [-1/2, 30]; bracketing
// scan over [max(alpha, 0.5), alpha + 10] then bisection.
double bessel_first_zero(double alpha);

SpectralData spectral_data(double d);

// Radial Neumann eigenfunction of the unit ball,
// phi1(r) = r^{-alpha} J_alpha(sqrt(lambda1) r) / J_alpha(sqrt(lambda1)),
// alpha = (d-2)/2, normalized so phi1(1) = 1. Evaluated through the
// entire series of r^{-alpha} J_alpha, so r = 0 needs no special case.
double phi1(int d, double r);
double phi1_deriv(int d, double r);
double phi1_deriv2(int d, double r);

// ubar(r) = 1 - phi1(r) on [0, 1], zero outside; slopes included.
RadialProfile optimal_profile(int d, int n_knots);

// C_Nash = (d+2)^{1+2/d} / (d * lambda1 * (2 omega_d)^{2/d}).
double nash_constant(double d);

}  // namespace nash

#endif
