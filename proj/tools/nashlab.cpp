// nashlab: command-line runs for the Nash / Gagliardo-Nirenberg constant
// laboratory. Emits CSV/JSON; exit code 0 = success, 1 = a numerical
// invariant failed, 2 = usage or domain error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nash/constants.hpp"
#include "nash/heat.hpp"
#include "nash/shooting.hpp"
#include "nash/specfun.hpp"
#include "nash/verify.hpp"

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    std::ofstream f(path, std::ios::binary);
    f << content;
  }
}

int cmd_constants(double d_min, double d_max, int n, const std::string& format,
                  const std::string& out) {
  auto rows = nash::figure_data(d_min, d_max, n);
  bool ok = true;
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json j = {{"d", r.d},          {"lambda1", r.lambda1},
                          {"c_nash", r.c_nash}, {"c1", r.c1},
                          {"c2", r.c2},         {"lower", r.gaussian_lower}};
      if (r.sobolev) j["sobolev"] = *r.sobolev;
      arr.push_back(j);
      ok = ok && r.ordering_ok();
    }
    os << arr.dump(2) << "\n";
  } else {
    os << "d,lambda1,c_nash,c1,c2,sobolev,lower\n";
    for (const auto& r : rows) {
      os << fmt(r.d) << ',' << fmt(r.lambda1) << ',' << fmt(r.c_nash) << ','
         << fmt(r.c1) << ',' << fmt(r.c2) << ','
         << (r.sobolev ? fmt(*r.sobolev) : std::string()) << ','
         << fmt(r.gaussian_lower) << "\n";
      ok = ok && r.ordering_ok();
    }
  }
  write_out(out, os.str());
  return ok ? 0 : 1;
}

std::string profile_csv(const nash::RadialProfile& u) {
  std::ostringstream os;
  os << (u.has_slopes() ? "r,u,du\n" : "r,u\n");
  for (std::size_t i = 0; i < u.knots.size(); ++i) {
    os << fmt(u.knots[i]) << ',' << fmt(u.values[i]);
    if (u.has_slopes()) os << ',' << fmt(u.slopes[i]);
    os << "\n";
  }
  return os.str();
}

int cmd_shoot(int d, double p, double tol, const std::string& out) {
  nash::ShootingResult r = nash::shoot(p, d, tol);
  nlohmann::json j = {{"p", r.p},
                      {"d", r.d},
                      {"h", r.h},
                      {"R", r.R},
                      {"mu", r.mu},
                      {"grad_sq", r.norms.grad_sq},
                      {"lp_pow", r.norms.lp_pow},
                      {"l2_sq", r.norms.l2_sq},
                      {"res1", r.res1},
                      {"res2", r.res2},
                      {"cgn", nash::gn_quotient(r.profile, p)}};
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_out(out + ".json", j.dump(2) + "\n");
    write_out(out + "_profile.csv", profile_csv(r.profile));
  }
  bool ok = std::abs(r.res1) <= 1e-6 && std::abs(r.res2) <= 1e-6;
  return ok ? 0 : 1;
}

int cmd_sweep(int d, const std::vector<double>& ps, double tol,
              const std::string& out) {
  auto rows = nash::sweep_p(d, ps, tol);
  std::ostringstream os;
  os << "p,h,R,mu,cgn\n";
  for (const auto& r : rows)
    os << fmt(r.p) << ',' << fmt(r.h) << ',' << fmt(r.R) << ',' << fmt(r.mu)
       << ',' << fmt(r.cgn) << "\n";
  write_out(out, os.str());
  // when p decreases toward 1, |R - R1| must shrink
  bool decreasing_p = true;
  for (std::size_t i = 1; i < ps.size(); ++i)
    decreasing_p = decreasing_p && ps[i] < ps[i - 1];
  bool ok = true;
  if (decreasing_p && rows.size() > 1) {
    double r1 = nash::spectral_data(d).R1;
    for (std::size_t i = 1; i < rows.size(); ++i)
      ok = ok && std::abs(rows[i].R - r1) < std::abs(rows[i - 1].R - r1);
  }
  return ok ? 0 : 1;
}

int cmd_heat(int d, const std::string& scenario, double eps, double t_max,
             int n, const std::string& out) {
  std::ostringstream os;
  os << "t,l2,nash_env,young_env\n";
  bool ok = true;
  if (scenario == "gaussian") {
    for (int i = 0; i <= n; ++i) {
      double t = t_max * i / n;
      nash::DecaySample s = nash::evolve_gaussian(eps, t, d);
      os << fmt(s.t) << ',' << fmt(s.l2) << ',' << fmt(s.nash_env) << ','
         << fmt(s.young_env) << "\n";
      ok = ok && s.l2 <= std::min(s.nash_env, s.young_env) * (1.0 + 1e-6);
    }
  } else if (scenario == "convolution") {
    if (d != 1) throw CLI::ValidationError("--scenario convolution needs --d 1");
    nash::RadialProfile u1 = nash::optimal_profile(1, 4097);
    double r1 = nash::spectral_data(1).R1;
    for (auto& k : u1.knots) k *= r1;
    for (auto& s : u1.slopes) s /= r1;
    for (int i = 1; i <= n; ++i) {
      double t = t_max * i / n;
      double width = u1.support_radius() + 12.0 * std::sqrt(t);
      nash::DecaySample s = nash::evolve_convolution_1d(u1, t, width, 8193);
      os << fmt(s.t) << ',' << fmt(s.l2) << ',' << fmt(s.nash_env) << ','
         << fmt(s.young_env) << "\n";
      ok = ok && s.l2 <= std::min(s.nash_env, s.young_env) * (1.0 + 1e-6);
    }
  } else {
    throw CLI::ValidationError("unknown scenario: " + scenario);
  }
  write_out(out, os.str());
  return ok ? 0 : 1;
}

int cmd_verify(int d, std::uint64_t seed, const std::string& out) {
  auto corpus = nash::make_corpus(d, seed);
  std::vector<nash::CheckReport> reports;
  reports.push_back(nash::check_nash(corpus, seed));
  for (double p : {1.2, 1.5}) {
    nash::ShootingResult gs = nash::shoot(p, d, 1e-10);
    reports.push_back(nash::check_gn(corpus, p, gs, seed));
  }
  reports.push_back(nash::check_carlen_loss_corpus(corpus, seed));
  reports.push_back(nash::check_poincare_ball(d, 1.0, seed));
  reports.push_back(nash::check_entropy_chain(corpus, seed));
  if (d == 1) reports.push_back(nash::check_fourier_bound(corpus, seed));
  write_out(out, nash::report_json(reports));
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

int cmd_profile(int d, int n, const std::string& out) {
  write_out(out, profile_csv(nash::optimal_profile(d, n)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharp Nash / Gagliardo-Nirenberg constant laboratory"};
  app.require_subcommand(1);

  double d_min = 1.0, d_max = 10.0, p = 1.5, tol = 1e-10, eps = 0.01,
         t_max = 1.0;
  int n = 200, n_heat = 8, n_prof = 1025, d = 1;
  std::string format = "csv", out, scenario = "gaussian", p_list = "1.5";
  std::uint64_t seed = 0;

  auto* c_cmd = app.add_subcommand("constants", "comparison constants on a real-d grid");
  c_cmd->add_option("--d-min", d_min);
  c_cmd->add_option("--d-max", d_max);
  c_cmd->add_option("--n", n);
  c_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  c_cmd->add_option("--out", out);

  auto* s_cmd = app.add_subcommand("shoot", "ground-state solve with Pohozaev certification");
  s_cmd->add_option("--d", d);
  s_cmd->add_option("--p", p);
  s_cmd->add_option("--tol", tol);
  s_cmd->add_option("--out", out);

  auto* w_cmd = app.add_subcommand("sweep", "ground states along a p list");
  w_cmd->add_option("--d", d);
  w_cmd->add_option("--p", p_list);
  w_cmd->add_option("--tol", tol);
  w_cmd->add_option("--out", out);

  auto* h_cmd = app.add_subcommand("heat", "L2 decay against the two envelopes");
  h_cmd->add_option("--d", d);
  h_cmd->add_option("--scenario", scenario);
  h_cmd->add_option("--eps", eps);
  h_cmd->add_option("--t-max", t_max);
  h_cmd->add_option("--n", n_heat);
  h_cmd->add_option("--out", out);

  auto* v_cmd = app.add_subcommand("verify", "inequality checks on a seeded corpus");
  v_cmd->add_option("--d", d);
  v_cmd->add_option("--seed", seed);
  v_cmd->add_option("--out", out);

  auto* p_cmd = app.add_subcommand("profile", "sampled optimal profile");
  p_cmd->add_option("--d", d);
  p_cmd->add_option("--n", n_prof);
  p_cmd->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("NASHLAB_SEED")) seed = std::strtoull(env, nullptr, 10);

  try {
    if (c_cmd->parsed()) {
      if (d_min > d_max) throw std::invalid_argument("--d-min > --d-max");
      return cmd_constants(d_min, d_max, n, format, out);
    }
    if (s_cmd->parsed()) return cmd_shoot(d, p, tol, out);
    if (w_cmd->parsed()) {
      std::vector<double> ps;
      std::stringstream ss(p_list);
      std::string tok;
      while (std::getline(ss, tok, ',')) ps.push_back(std::stod(tok));
      return cmd_sweep(d, ps, tol, out);
    }
    if (h_cmd->parsed()) return cmd_heat(d, scenario, eps, t_max, n_heat, out);
    if (v_cmd->parsed()) return cmd_verify(d, seed, out);
    if (p_cmd->parsed()) return cmd_profile(d, n_prof, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
