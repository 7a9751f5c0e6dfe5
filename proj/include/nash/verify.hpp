#ifndef NASH_VERIFY_HPP
#define NASH_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nash/radial.hpp"
#include "nash/shooting.hpp"

namespace nash {

enum class Family { gaussian, cosine_bump, poly_bump, tent, scaled_optimizer };

/// Parameterized radial non-increasing test function:
///   gaussian(s):              exp(-(r/s)^2), truncated at 8 s
///   cosine_bump(R):           1 + cos(pi r / R) on [0, R]
///   poly_bump(R, k):          (1 - (r/R)^2)^k on [0, R]
///   tent(R):                  (1 - r/R) on [0, R]
///   scaled_optimizer(sigma, amp): amp * ubar(sigma r), support 1/sigma
struct TestFunctionSpec {
  Family family;
  int d = 1;
  double s = 1.0;
  double R = 1.0;
  int k = 1;
  double sigma = 1.0;
  double amp = 1.0;
};

RadialProfile generate(const TestFunctionSpec& spec, int n_knots);

struct CheckReport {
  std::string name;
  int samples = 0;
  double worst_slack = 0.0;  // signed, relative; negative means violated
  bool pass = false;
  std::uint64_t seed = 0;
};

// Deterministic seeded corpus, >= 5 families x per_family specs.
std::vector<TestFunctionSpec> make_corpus(int d, std::uint64_t seed,
                                          int per_family = 25);

// Relative L2 distance from u to the canonical optimizer after best-fit
// normalization over the quotient invariances (scale and amplitude).
double optimizer_distance(const RadialProfile& u);

// True when the spec is the optimizer up to the quotient invariances
// (scaled_optimizer always; cosine_bump coincides with it in d = 1).
bool is_optimizer_spec(const TestFunctionSpec& spec);

CheckReport check_nash(const std::vector<TestFunctionSpec>& corpus,
                       std::uint64_t seed, int n_knots = 2049);

CheckReport check_gn(const std::vector<TestFunctionSpec>& corpus, double p,
                     const ShootingResult& ground_state, std::uint64_t seed,
                     int n_knots = 2049);

// The four inequalities of the truncation chain for one profile; R is
// snapped to the nearest knot.
CheckReport check_carlen_loss(const RadialProfile& u, double R);

CheckReport check_carlen_loss_corpus(const std::vector<TestFunctionSpec>& corpus,
                                     std::uint64_t seed, int n_knots = 2049);

CheckReport check_poincare_ball(int d, double R, std::uint64_t seed);

CheckReport check_entropy_chain(const std::vector<TestFunctionSpec>& corpus,
                                std::uint64_t seed, int n_knots = 2049);

CheckReport check_fourier_bound(const std::vector<TestFunctionSpec>& corpus_1d,
                                std::uint64_t seed, int n_knots = 2049);

std::string report_json(const std::vector<CheckReport>& reports);

}  // namespace nash

#endif
