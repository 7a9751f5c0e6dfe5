#include "nash/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "nash/radial.hpp"
#include "nash/shooting.hpp"
#include "nash/specfun.hpp"

namespace nash {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ExponentPair exponents(double p, double d) {
  if (!(p >= 1.0 && p < 2.0)) throw std::invalid_argument("exponents: p in [1,2)");
  if (!(d >= 1.0)) throw std::invalid_argument("exponents: d >= 1");
  return ExponentPair{d * (2.0 - p), 2.0 * p};
}

double cgn(double p, int d, double tol) {
  ShootingResult r = shoot(p, d, tol);
  return gn_quotient(r.profile, p);
}

double kgn_from_cgn(double p, double lambda, double d, double cgn_value) {
  if (!(lambda > 0.0)) throw std::invalid_argument("kgn: lambda > 0");
  ExponentPair e = exponents(p, d);
  double ab = e.a + e.b;
  double front = ab / (std::pow(e.a, e.a / ab) * std::pow(e.b, e.b / ab));
  return front * std::pow(lambda, e.b / ab) * cgn_value;
}

double kgn(double p, double lambda, int d, double tol) {
  return kgn_from_cgn(p, lambda, d, cgn(p, d, tol));
}

double sobolev_constant(double d) {
  if (!(d > 2.0)) throw std::domain_error("sobolev_constant: requires d > 2");
  return 1.0 / (d * (d - 2.0) * kPi) *
         std::pow(gamma_fn(d) / gamma_fn(0.5 * d), 2.0 / d);
}

double c1_bound(double d) {
  if (!(d >= 1.0)) throw std::domain_error("c1_bound: requires d >= 1");
  return 2.0 / (kPi * d * std::exp(1.0));
}

double c2_bound(double d) {
  if (!(d >= 1.0)) throw std::domain_error("c2_bound: requires d >= 1");
  return 1.0 / (4.0 * kPi) * std::pow((d + 2.0) / d, 1.0 + 2.0 / d) *
         std::pow(gamma_fn(0.5 * d), -2.0 / d);
}

bool ConstantsRow::ordering_ok() const {
  double upper = std::min(c1, c2);
  if (sobolev) upper = std::min(upper, *sobolev);
  return gaussian_lower < c_nash && c_nash <= upper;
}

ConstantsRow constants_row(double d) {
  ConstantsRow row;
  row.d = d;
  row.lambda1 = spectral_data(d).lambda1;
  row.c_nash = nash_constant(d);
  row.c1 = c1_bound(d);
  row.c2 = c2_bound(d);
  if (d > 2.0) row.sobolev = sobolev_constant(d);
  row.gaussian_lower = 1.0 / (2.0 * kPi * d);
  return row;
}

std::vector<ConstantsRow> figure_data(double d_min, double d_max, int n) {
  if (!(d_min >= 1.0) || !(d_max >= d_min) || n < 1)
    throw std::invalid_argument("figure_data: bad grid");
  std::vector<ConstantsRow> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    double d = n == 1 ? d_min : d_min + (d_max - d_min) * i / (n - 1);
    rows.push_back(constants_row(d));
  }
  return rows;
}

}  // namespace nash
