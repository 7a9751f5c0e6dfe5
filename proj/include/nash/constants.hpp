#ifndef NASH_CONSTANTS_HPP
#define NASH_CONSTANTS_HPP

#include <optional>
#include <vector>

namespace nash {

struct ExponentPair {
  double a;  // d (2 - p)
  double b;  // 2 p
};

ExponentPair exponents(double p, double d);

// Optimal Gagliardo-Nirenberg constant C_GN(p) = Q_p[u_p], realized by
// the shooting ground state.
double cgn(double p, int d, double tol = 1e-10);

// K_GN(p, lambda) = ((a+b) / (a^{a/(a+b)} b^{b/(a+b)})) lambda^{b/(a+b)} C_GN(p).
double kgn_from_cgn(double p, double lambda, double d, double cgn_value);
double kgn(double p, double lambda, int d, double tol = 1e-10);

// S_d = (1/(d(d-2)pi)) (Gamma(d)/Gamma(d/2))^{2/d}, d > 2.
double sobolev_constant(double d);

// C1(d) = 2/(pi d e).
double c1_bound(double d);

// C2(d) = (1/(4 pi)) ((d+2)/d)^{1+2/d} Gamma(d/2)^{-2/d}.
double c2_bound(double d);

struct ConstantsRow {
  double d;
  double lambda1;
  double c_nash;
  double c1;
  double c2;
  std::optional<double> sobolev;  // d > 2 only
  double gaussian_lower;          // 1/(2 pi d)

  // gaussian_lower < c_nash <= min(c1, c2[, sobolev])
  bool ordering_ok() const;
};

ConstantsRow constants_row(double d);

std::vector<ConstantsRow> figure_data(double d_min, double d_max, int n);

}  // namespace nash

#endif
