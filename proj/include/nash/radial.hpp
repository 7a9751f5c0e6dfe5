#ifndef NASH_RADIAL_HPP
#define NASH_RADIAL_HPP

#include <vector>

namespace nash {

/// A nonnegative radial function on R^d sampled on a uniform knot grid
/// r_0 = 0 < r_1 < ... < r_n = R. Slopes are optional; when absent they
/// are reconstructed by centered finite differences.
struct RadialProfile {
  int d = 1;
  std::vector<double> knots;
  std::vector<double> values;
  std::vector<double> slopes;  // empty if not available

  double support_radius() const { return knots.back(); }
  bool has_slopes() const { return !slopes.empty(); }
};

/// G = |grad u|_2^2, P = |u|_p^p, M = |u|_2^2.
struct NormTriple {
  double grad_sq = 0.0;
  double lp_pow = 0.0;
  double l2_sq = 0.0;
};

// Composite Simpson on a uniform grid (Simpson 3/8 patch when the
// interval count is odd). Exact for cubics.
double integrate_uniform(const std::vector<double>& r, const std::vector<double>& f);

// Centered second-order slopes, one-sided at the ends.
std::vector<double> finite_difference_slopes(const std::vector<double>& r,
                                             const std::vector<double>& u);

// Full-space L^q norm of the radial function: (d*omega_d*int u^q r^{d-1} dr)^{1/q}.
double lp_norm(const RadialProfile& u, double q);

// |grad u|_2^2 = d*omega_d*int u'(r)^2 r^{d-1} dr.
double grad_l2_sq(const RadialProfile& u);

NormTriple norm_triple(const RadialProfile& u, double p);

// |u|_2^{2+4/d} / (|u|_1^{4/d} |grad u|_2^2); supremum over u equals C_Nash.
double nash_quotient(const RadialProfile& u);

// Q_p[u] = |grad u|_2^{2a/(a+b)} |u|_p^{2b/(a+b)} / |u|_2^2 with
// a = d(2-p), b = 2p; infimum over u equals C_GN(p).
double gn_quotient(const RadialProfile& u, double p);

}  // namespace nash

#endif
