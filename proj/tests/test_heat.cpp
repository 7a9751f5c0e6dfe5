#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "nash/heat.hpp"
#include "nash/radial.hpp"
#include "nash/specfun.hpp"
#include "support.hpp"

using namespace nash;

namespace {
constexpr double kPi = 3.14159265358979323846;

RadialProfile cosine_ground_state_1d(int n) {
  RadialProfile u;
  u.d = 1;
  for (int i = 0; i < n; ++i) {
    double r = kPi * i / (n - 1);
    u.knots.push_back(r);
    u.values.push_back(1.0 + std::cos(r));
    u.slopes.push_back(-std::sin(r));
  }
  return u;
}

double grid_l2_distance(const Grid1D& a, const Grid1D& b) {
  double h = (a.x.back() - a.x.front()) / (a.x.size() - 1);
  double s = 0.0;
  for (std::size_t i = 0; i < a.f.size(); ++i) {
    double dfi = a.f[i] - b.f[i];
    s += dfi * dfi * (i == 0 || i + 1 == a.f.size() ? 0.5 : 1.0);
  }
  return std::sqrt(h * s);
}
}  // namespace

TEST_CASE("heat kernel norms") {
  for (int d : {1, 2, 3}) {
    double omega = ball_volume(d);
    for (double t : {0.05, 0.3, 2.0}) {
      CHECK(heat_kernel(t, 0.0, d) ==
            doctest::Approx(std::pow(4.0 * kPi * t, -0.5 * d)).epsilon(1e-14));
      double cut = 14.0 * std::sqrt(t);
      double l1 = nash_test::tanh_sinh(
          [&](double rho) {
            return d * omega * std::pow(rho, d - 1) * heat_kernel(t, rho, d);
          },
          0.0, cut);
      CHECK(l1 == doctest::Approx(1.0).epsilon(1e-10));
      double l2sq = nash_test::tanh_sinh(
          [&](double rho) {
            double g = heat_kernel(t, rho, d);
            return d * omega * std::pow(rho, d - 1) * g * g;
          },
          0.0, cut);
      CHECK(std::sqrt(l2sq) ==
            doctest::Approx(std::pow(8.0 * kPi * t, -0.25 * d)).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(heat_kernel(0.0, 1.0, 2), std::domain_error);
  CHECK_THROWS_AS(heat_kernel(-1.0, 1.0, 2), std::domain_error);
}

TEST_CASE("nash envelope") {
  CHECK(nash_envelope(0.0, 2.5, 7.0, 3) == doctest::Approx(2.5).epsilon(1e-14));

  // dominant-term asymptotics: envelope * t^{d/4} converges
  for (int d : {1, 2, 3}) {
    double a = nash_envelope(1e6, 1.0, 1.0, d) * std::pow(1e6, 0.25 * d);
    double b = nash_envelope(1e8, 1.0, 1.0, d) * std::pow(1e8, 0.25 * d);
    CHECK(a == doctest::Approx(b).epsilon(1e-2));
    CHECK(b == doctest::Approx(std::pow(4.0 / (d * nash_constant(d)), -0.25 * d))
                   .epsilon(1e-2));
  }

  // equality case at t = 0 for u1 = 1 + cos in d = 1: slope -pi/sqrt(3 pi)
  double l1 = 2.0 * kPi, l2 = std::sqrt(3.0 * kPi);
  double dt = 1e-6;
  double slope =
      (nash_envelope(dt, l2, l1, 1) - nash_envelope(0.0, l2, l1, 1)) / dt;
  CHECK(slope == doctest::Approx(-kPi / std::sqrt(3.0 * kPi)).epsilon(1e-4));
}

TEST_CASE("young envelope") {
  for (int d : {1, 2, 3}) {
    double e1 = young_envelope(0.7, 3.0, d);
    CHECK(young_envelope(1.4, 3.0, d) ==
          doctest::Approx(e1 * std::pow(2.0, -0.25 * d)).epsilon(1e-14));
  }
  CHECK(young_envelope(2.0, 0.0, 2) == 0.0);
  CHECK_THROWS_AS(young_envelope(0.0, 1.0, 1), std::domain_error);
}

TEST_CASE("gaussian evolution is the equality case") {
  for (int d : {1, 2, 3}) {
    for (double eps : {0.01, 0.1, 1.0}) {
      for (double t : {0.001, 0.05, 0.4, 3.0, 50.0}) {
        DecaySample s = evolve_gaussian(eps, t, d);
        CHECK(s.l2 / s.young_env ==
              doctest::Approx(std::pow(t / (t + eps), 0.25 * d)).epsilon(1e-14));
        CHECK(s.l2 <= s.nash_env * (1.0 + 1e-10));
      }
      DecaySample s0 = evolve_gaussian(eps, 0.0, d);
      CHECK(s0.l2 == doctest::Approx(std::pow(8.0 * kPi * eps, -0.25 * d)).epsilon(1e-14));
      CHECK(s0.l2 == doctest::Approx(s0.nash_env).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(evolve_gaussian(0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("1-d convolution evolution of the cosine ground state") {
  RadialProfile u1 = cosine_ground_state_1d(4097);

  // mass conservation at t = 0.1
  {
    double t = 0.1, hw = kPi + 12.0 * std::sqrt(t);
    Grid1D g0 = profile_to_grid(u1, hw, 8192);
    Grid1D gt = convolve_heat(g0, t);
    CHECK(gt.trapezoid_l1() == doctest::Approx(2.0 * kPi).epsilon(1e-8));
    CHECK(g0.trapezoid_l1() == doctest::Approx(2.0 * kPi).epsilon(1e-8));
  }

  // monotone decay below both envelopes
  double prev = 1e300;
  for (double t : {0.01, 0.03, 0.1, 0.3, 1.0, 3.0}) {
    DecaySample s = evolve_convolution_1d(u1, t, kPi + 12.0 * std::sqrt(t), 8192);
    CHECK(s.l2 <= std::min(s.nash_env, s.young_env) * (1.0 + 1e-6));
    CHECK(s.l2 < prev);
    prev = s.l2;
  }

  // continuity at t -> 0+: initial L2 norm is sqrt(3 pi)
  DecaySample tiny = evolve_convolution_1d(u1, 1e-4, kPi + 0.2, 8192);
  CHECK(tiny.l2 == doctest::Approx(std::sqrt(3.0 * kPi)).epsilon(1e-3));

  // window too small for the requested time
  CHECK_THROWS_AS(evolve_convolution_1d(u1, 1.0, kPi + 6.0, 4096),
                  std::invalid_argument);
}

TEST_CASE("semigroup consistency in d = 1") {
  RadialProfile u1 = cosine_ground_state_1d(4097);
  double t = 0.02, hw = kPi + 12.0 * std::sqrt(2.0 * t);
  Grid1D g0 = profile_to_grid(u1, hw, 8192);
  Grid1D direct = convolve_heat(g0, 2.0 * t);
  Grid1D stepped = convolve_heat(convolve_heat(g0, t), t);
  CHECK(grid_l2_distance(direct, stepped) <= 1e-6);
}

TEST_CASE("t = 0 sharpness of the Nash envelope") {
  SharpnessReport r1 = t0_sharpness_check(1);
  CHECK(r1.lhs == doctest::Approx(2.0 * kPi).epsilon(1e-6));
  CHECK(r1.rhs == doctest::Approx(2.0 * kPi).epsilon(1e-6));
  CHECK(r1.rel_gap <= 1e-5);
  for (int d : {2, 3}) CHECK(t0_sharpness_check(d).rel_gap <= 1e-5);

  // the Gaussian sits strictly inside the inequality
  for (int d = 1; d <= 10; ++d) {
    CHECK(1.0 / (2.0 * kPi * d) < nash_constant(d));
    CHECK(8.0 * kPi - 4.0 / (d * nash_constant(d)) > 0.0);
  }
}

TEST_CASE("envelope crossover") {
  double l1 = 2.0 * kPi, l2 = std::sqrt(3.0 * kPi);
  CrossoverResult c = crossover(1, l1, l2);
  REQUIRE(c.exists);
  CHECK(c.young_dominates_late);
  double n = nash_envelope(c.t_star, l2, l1, 1);
  double y = young_envelope(c.t_star, l1, 1);
  CHECK(std::abs(n - y) <= 1e-10 * n);

  // scaling u0 leaves the crossover time unchanged
  for (double scale : {0.1, 5.0}) {
    CrossoverResult cs = crossover(1, scale * l1, scale * l2);
    REQUIRE(cs.exists);
    CHECK(cs.t_star == doctest::Approx(c.t_star).epsilon(1e-10));
  }

  for (int d : {2, 3}) {
    RadialProfile u = optimal_profile(d, 2049);
    CrossoverResult cd = crossover(d, lp_norm(u, 1.0), lp_norm(u, 2.0));
    REQUIRE(cd.exists);
    CHECK(cd.young_dominates_late);
  }
}
