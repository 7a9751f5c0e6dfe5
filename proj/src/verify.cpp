#include "nash/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "nash/constants.hpp"
#include "nash/specfun.hpp"

#include "json.hpp"

namespace nash {

namespace {

constexpr double kPi = 3.14159265358979323846;

// d*omega_d*int_{r_a}^{r_b} f r^{d-1} dr over a knot index range.
double radial_integral(const RadialProfile& u, const std::vector<double>& f,
                       std::size_t ia, std::size_t ib) {
  if (ib <= ia + 0) return 0.0;
  std::vector<double> r(u.knots.begin() + ia, u.knots.begin() + ib + 1);
  std::vector<double> g(ib - ia + 1);
  for (std::size_t i = ia; i <= ib; ++i)
    g[i - ia] = f[i] * std::pow(u.knots[i], u.d - 1);
  return u.d * ball_volume(u.d) * integrate_uniform(r, g);
}

std::size_t snap_knot(const RadialProfile& u, double R) {
  double h = u.support_radius() / (u.knots.size() - 1);
  long i = std::lround(R / h);
  i = std::clamp<long>(i, 1, static_cast<long>(u.knots.size()) - 1);
  return static_cast<std::size_t>(i);
}

double interp_value(const RadialProfile& u, double r) {
  if (r <= 0.0) return u.values.front();
  if (r >= u.support_radius()) return 0.0;
  double h = u.support_radius() / (u.knots.size() - 1);
  std::size_t i = static_cast<std::size_t>(r / h);
  double t = (r - u.knots[i]) / h;
  return (1.0 - t) * u.values[i] + t * u.values[i + 1];
}

}  // namespace

RadialProfile generate(const TestFunctionSpec& spec, int n_knots) {
  if (n_knots < 16) throw std::invalid_argument("generate: n_knots >= 16");
  RadialProfile u;
  u.d = spec.d;
  double R;
  switch (spec.family) {
    case Family::gaussian:
      if (!(spec.s > 0.0)) throw std::invalid_argument("generate: gaussian s > 0");
      R = 8.0 * spec.s;
      break;
    case Family::cosine_bump:
    case Family::poly_bump:
    case Family::tent:
      if (!(spec.R > 0.0)) throw std::invalid_argument("generate: R > 0");
      if (spec.family == Family::poly_bump && spec.k < 1)
        throw std::invalid_argument("generate: poly_bump k >= 1");
      R = spec.R;
      break;
    case Family::scaled_optimizer:
      if (!(spec.sigma > 0.0 && spec.amp > 0.0))
        throw std::invalid_argument("generate: sigma, amp > 0");
      R = 1.0 / spec.sigma;
      break;
    default:
      throw std::invalid_argument("generate: unknown family");
  }
  u.knots.resize(n_knots);
  u.values.resize(n_knots);
  u.slopes.resize(n_knots);
  for (int i = 0; i < n_knots; ++i) {
    double r = R * i / (n_knots - 1);
    u.knots[i] = r;
    switch (spec.family) {
      case Family::gaussian: {
        double x = r / spec.s;
        u.values[i] = std::exp(-x * x);
        u.slopes[i] = -2.0 * r / (spec.s * spec.s) * u.values[i];
        break;
      }
      case Family::cosine_bump:
        u.values[i] = 1.0 + std::cos(kPi * r / R);
        u.slopes[i] = -kPi / R * std::sin(kPi * r / R);
        break;
      case Family::poly_bump: {
        double w = 1.0 - (r / R) * (r / R);
        u.values[i] = std::pow(w, spec.k);
        u.slopes[i] = -2.0 * spec.k * r / (R * R) *
                      (spec.k == 1 ? 1.0 : std::pow(w, spec.k - 1));
        break;
      }
      case Family::tent:
        u.values[i] = 1.0 - r / R;
        u.slopes[i] = -1.0 / R;
        break;
      case Family::scaled_optimizer:
        u.values[i] = spec.amp * (1.0 - phi1(spec.d, spec.sigma * r));
        u.slopes[i] = -spec.amp * spec.sigma * phi1_deriv(spec.d, spec.sigma * r);
        break;
    }
  }
  u.values.back() = std::max(u.values.back(), 0.0);
  if (spec.family != Family::gaussian) u.values.back() = 0.0;
  return u;
}

std::vector<TestFunctionSpec> make_corpus(int d, std::uint64_t seed, int per_family) {
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(d));
  std::uniform_real_distribution<double> un(0.0, 1.0);
  std::vector<TestFunctionSpec> corpus;
  corpus.reserve(5 * per_family);
  for (int i = 0; i < per_family; ++i) {
    TestFunctionSpec g{Family::gaussian, d};
    g.s = 0.5 + 2.5 * un(rng);
    corpus.push_back(g);
    TestFunctionSpec c{Family::cosine_bump, d};
    c.R = 0.5 + 3.5 * un(rng);
    corpus.push_back(c);
    TestFunctionSpec p{Family::poly_bump, d};
    p.R = 0.5 + 3.5 * un(rng);
    p.k = 1 + static_cast<int>(4.0 * un(rng));
    corpus.push_back(p);
    TestFunctionSpec t{Family::tent, d};
    t.R = 0.5 + 3.5 * un(rng);
    corpus.push_back(t);
    TestFunctionSpec o{Family::scaled_optimizer, d};
    o.sigma = 0.3 + 2.7 * un(rng);
    o.amp = 0.2 + 4.8 * un(rng);
    corpus.push_back(o);
  }
  return corpus;
}

bool is_optimizer_spec(const TestFunctionSpec& spec) {
  return spec.family == Family::scaled_optimizer ||
         (spec.family == Family::cosine_bump && spec.d == 1);
}

double optimizer_distance(const RadialProfile& u) {
  RadialProfile ubar = optimal_profile(u.d, 2049);
  const int n = 1 << 12;
  double best = 1e300;
  for (double ls = -0.5; ls <= 0.5 + 1e-12; ls += 0.01) {
    double sigma = u.support_radius() * std::exp(ls);
    double xmax = std::max(1.0, u.support_radius() / sigma);
    double uu = 0.0, ub = 0.0, bb = 0.0;
    for (int i = 0; i <= n; ++i) {
      double x = xmax * i / n;
      double w = ((i == 0 || i == n) ? 0.5 : 1.0) * std::pow(x, u.d - 1);
      double a = interp_value(u, x * sigma);
      double b = x < 1.0 ? interp_value(ubar, x) : 0.0;
      uu += w * a * a;
      ub += w * a * b;
      bb += w * b * b;
    }
    double c = uu > 0.0 ? ub / uu : 0.0;
    double d2 = (c * c * uu - 2.0 * c * ub + bb) / bb;
    best = std::min(best, std::sqrt(std::max(0.0, d2)));
  }
  return best;
}

CheckReport check_nash(const std::vector<TestFunctionSpec>& corpus,
                       std::uint64_t seed, int n_knots) {
  CheckReport rep{"nash", 0, 1e300, true, seed};
  if (corpus.empty()) throw std::invalid_argument("check_nash: empty corpus");
  double c = nash_constant(corpus.front().d);
  for (const auto& spec : corpus) {
    RadialProfile u = generate(spec, n_knots);
    double slack = 1.0 - nash_quotient(u) / c;
    rep.worst_slack = std::min(rep.worst_slack, slack);
    if (slack < -1e-6) rep.pass = false;
    if (is_optimizer_spec(spec) && std::abs(slack) > 1e-5) rep.pass = false;
    // Non-optimizers must either keep a clear gap or be genuinely close in
    // shape to the optimizer (guards against false equality cases).
    if (!is_optimizer_spec(spec) && slack < 1e-3) {
      if (slack < 1e-6 || optimizer_distance(u) > 0.05) rep.pass = false;
    }
    ++rep.samples;
  }
  return rep;
}

CheckReport check_gn(const std::vector<TestFunctionSpec>& corpus, double p,
                     const ShootingResult& ground_state, std::uint64_t seed,
                     int n_knots) {
  CheckReport rep{"gn_p", 0, 1e300, true, seed};
  rep.name = "gn_p" + std::to_string(p).substr(0, 4);
  double c = gn_quotient(ground_state.profile, p);
  {
    double slack = gn_quotient(ground_state.profile, p) / c - 1.0;
    rep.worst_slack = std::min(rep.worst_slack, slack);
    if (std::abs(slack) > 1e-6) rep.pass = false;
    ++rep.samples;
  }
  for (const auto& spec : corpus) {
    RadialProfile u = generate(spec, n_knots);
    double slack = gn_quotient(u, p) / c - 1.0;
    rep.worst_slack = std::min(rep.worst_slack, slack);
    if (slack < -1e-4) rep.pass = false;
    ++rep.samples;
  }
  return rep;
}

CheckReport check_carlen_loss(const RadialProfile& u, double R) {
  for (std::size_t i = 1; i < u.values.size(); ++i)
    if (u.values[i] > u.values[i - 1] + 1e-12)
      throw std::invalid_argument("check_carlen_loss: profile not non-increasing");
  CheckReport rep{"carlen_loss", 1, 1e300, true, 0};
  std::size_t n = u.knots.size();
  std::size_t k = snap_knot(u, std::min(R, u.support_radius()));
  double Rs = u.knots[k];
  double wd = ball_volume(u.d);
  double lam = spectral_data(u.d).lambda1;

  std::vector<double> vals = u.values;
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) sq[i] = vals[i] * vals[i];

  double l1_in = radial_integral(u, vals, 0, k);
  double l1_out = radial_integral(u, vals, k, n - 1);
  double m_in = radial_integral(u, sq, 0, k);
  double m_out = radial_integral(u, sq, k, n - 1);
  double g = grad_l2_sq(u);
  double l1 = l1_in + l1_out;
  double m = m_in + m_out;
  double pow_R = std::pow(Rs, u.d);

  // (i) truncation tail against the ball average
  double rhs1 = l1_in / (pow_R * wd) * l1_out;
  double s1 = (rhs1 - m_out) / std::max(m, 1e-300);
  // (ii) Poincare step on the ball
  double rhs2 = Rs * Rs / lam * g + l1_in * l1_in / (pow_R * wd);
  double s2 = (rhs2 - m_in) / std::max(m, 1e-300);
  // (iii) mass comparison
  double s3 = (l1 * l1 - l1_in * l1) / std::max(l1 * l1, 1e-300);
  // (iv) assembled bound
  double rhs4 = Rs * Rs / lam * g + l1 * l1 / (pow_R * wd);
  double s4 = (rhs4 - m) / std::max(m, 1e-300);

  rep.worst_slack = std::min({s1, s2, s3, s4});
  rep.pass = rep.worst_slack >= -1e-7;
  return rep;
}

CheckReport check_carlen_loss_corpus(const std::vector<TestFunctionSpec>& corpus,
                                     std::uint64_t seed, int n_knots) {
  CheckReport rep{"carlen_loss", 0, 1e300, true, seed};
  std::mt19937_64 rng(seed + 17);
  std::uniform_real_distribution<double> un(0.2, 1.0);
  for (const auto& spec : corpus) {
    RadialProfile u = generate(spec, n_knots);
    double R = un(rng) * u.support_radius();
    CheckReport one = check_carlen_loss(u, R);
    rep.worst_slack = std::min(rep.worst_slack, one.worst_slack);
    rep.pass = rep.pass && one.pass;
    ++rep.samples;
  }
  return rep;
}

CheckReport check_poincare_ball(int d, double R, std::uint64_t seed) {
  CheckReport rep{"poincare_ball", 0, 1e300, true, seed};
  double lam = spectral_data(d).lambda1;
  const int n = 4097;
  auto ratio_slack = [&](const RadialProfile& v) {
    // subtract the ball average, then test int v^2 <= (R^2/lam) int v'^2
    std::vector<double> ones(n, 1.0);
    double vol = radial_integral(v, ones, 0, n - 1);
    std::vector<double> vals = v.values;
    double mean = radial_integral(v, vals, 0, n - 1) / vol;
    RadialProfile w = v;
    for (auto& x : w.values) x -= mean;
    std::vector<double> sq(n);
    for (int i = 0; i < n; ++i) sq[i] = w.values[i] * w.values[i];
    double lhs = radial_integral(w, sq, 0, n - 1);
    double rhs = R * R / lam * grad_l2_sq(w);
    return (rhs - lhs) / std::max(rhs, 1e-300);
  };

  RadialProfile eig;
  eig.d = d;
  eig.knots.resize(n);
  eig.values.resize(n);
  eig.slopes.resize(n);
  for (int i = 0; i < n; ++i) {
    double r = R * i / (n - 1);
    eig.knots[i] = r;
    eig.values[i] = phi1(d, r / R);
    eig.slopes[i] = phi1_deriv(d, r / R) / R;
  }
  double eig_slack = ratio_slack(eig);
  rep.worst_slack = std::min(rep.worst_slack, eig_slack);
  if (std::abs(eig_slack) > 1e-6) rep.pass = false;
  ++rep.samples;

  std::mt19937_64 rng(seed + 29);
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  for (int sample = 0; sample < 20; ++sample) {
    double c[5];
    for (double& ci : c) ci = un(rng);
    RadialProfile v;
    v.d = d;
    v.knots.resize(n);
    v.values.resize(n);
    v.slopes.resize(n);
    for (int i = 0; i < n; ++i) {
      double r = R * i / (n - 1);
      double x = r / R;
      v.knots[i] = r;
      v.values[i] = c[0] + c[1] * x + c[2] * x * x + c[3] * x * x * x +
                    c[4] * x * x * x * x;
      v.slopes[i] =
          (c[1] + 2 * c[2] * x + 3 * c[3] * x * x + 4 * c[4] * x * x * x) / R;
    }
    double slack = ratio_slack(v);
    rep.worst_slack = std::min(rep.worst_slack, slack);
    if (slack < -1e-9) rep.pass = false;
    ++rep.samples;
  }
  return rep;
}

CheckReport check_entropy_chain(const std::vector<TestFunctionSpec>& corpus,
                                std::uint64_t seed, int n_knots) {
  CheckReport rep{"entropy_chain", 0, 1e300, true, seed};
  if (corpus.empty()) throw std::invalid_argument("check_entropy_chain: empty corpus");
  int d = corpus.front().d;
  double c1 = c1_bound(d);
  for (const auto& spec : corpus) {
    RadialProfile u = generate(spec, n_knots);
    double l1 = lp_norm(u, 1.0);
    double l2 = lp_norm(u, 2.0);
    double m = l2 * l2;
    double g = grad_l2_sq(u);
    std::size_t n = u.knots.size();
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
      double x = u.values[i];
      f[i] = x > 0.0 ? x * x * std::log(x) : 0.0;  // u^2 log u -> 0 at u = 0
    }
    double entropy = radial_integral(u, f, 0, n - 1) / m;
    double jensen_slack = entropy - std::log(m / l1);
    double logsob_rhs =
        std::log(l2) + 0.25 * d * std::log(2.0 / (kPi * d * std::exp(1.0)) * g / m);
    double logsob_slack = logsob_rhs - entropy;
    double composed_slack = 1.0 - nash_quotient(u) / c1;
    double worst = std::min({jensen_slack, logsob_slack, composed_slack});
    rep.worst_slack = std::min(rep.worst_slack, worst);
    if (worst < -1e-6) rep.pass = false;
    ++rep.samples;
  }
  return rep;
}

CheckReport check_fourier_bound(const std::vector<TestFunctionSpec>& corpus_1d,
                                std::uint64_t seed, int n_knots) {
  CheckReport rep{"fourier_split", 0, 1e300, true, seed};
  double c2 = c2_bound(1.0);
  for (const auto& spec : corpus_1d) {
    if (spec.d != 1) throw std::invalid_argument("check_fourier_bound: d = 1 only");
    RadialProfile u = generate(spec, n_knots);
    double l1 = lp_norm(u, 1.0);
    double l2 = lp_norm(u, 2.0);
    double m = l2 * l2;
    double g = grad_l2_sq(u);
    for (int i = 0; i < 25; ++i) {
      double R = std::pow(10.0, -2.0 + 4.0 * i / 24.0);
      // (2 pi)^{-1} * omega_1 * R = R / pi in d = 1
      double rhs = R / kPi * l1 * l1 + g / (R * R);
      double slack = (rhs - m) / rhs;
      rep.worst_slack = std::min(rep.worst_slack, slack);
      if (slack < -1e-9) rep.pass = false;
    }
    double qslack = 1.0 - nash_quotient(u) / c2;
    rep.worst_slack = std::min(rep.worst_slack, qslack);
    if (qslack < 0.0) rep.pass = false;
    ++rep.samples;
  }
  return rep;
}

std::string report_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    arr.push_back({{"name", r.name},
                   {"samples", r.samples},
                   {"worst_slack", r.worst_slack},
                   {"pass", r.pass},
                   {"seed", r.seed}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace nash
