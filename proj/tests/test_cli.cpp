#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {
constexpr double kPi = 3.14159265358979323846;

std::string bin() {
  const char* b = std::getenv("NASHLAB_BIN");
  REQUIRE(b != nullptr);
  return b;
}

int run(const std::string& args, const std::string& stdout_file = "") {
  std::string cmd = bin() + " " + args;
  if (!stdout_file.empty()) cmd += " > " + stdout_file;
  cmd += " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// Parse a CSV with a header line into columns of doubles (empty cells NaN).
std::vector<std::vector<double>> csv_columns(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  REQUIRE(std::getline(is, line));
  std::size_t ncol = 1 + std::count(line.begin(), line.end(), ',');
  std::vector<std::vector<double>> cols(ncol);
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string cell;
    for (std::size_t c = 0; c < ncol; ++c) {
      std::getline(ls, cell, ',');
      cols[c].push_back(cell.empty() ? std::nan("") : std::stod(cell));
    }
  }
  return cols;
}
}  // namespace

TEST_CASE("constants command") {
  CHECK(run("constants --d-min 1 --d-max 1 --n 1 --out cli_c1.csv") == 0);
  auto cols = csv_columns(slurp("cli_c1.csv"));
  REQUIRE(cols[0].size() == 1);
  CHECK(cols[0][0] == doctest::Approx(1.0));
  CHECK(cols[2][0] == doctest::Approx(27.0 / (16.0 * kPi * kPi)).epsilon(1e-12));

  CHECK(run("constants --d-min 1 --d-max 10 --n 200 --out cli_c200.csv") == 0);
  auto big = csv_columns(slurp("cli_c200.csv"));
  REQUIRE(big[0].size() == 200);
  for (std::size_t i = 0; i < 200; ++i) {
    CHECK(big[2][i] > big[6][i]);                           // c_nash > lower
    CHECK(big[2][i] <= std::min(big[3][i], big[4][i]));     // <= c1, c2
    if (big[0][i] > 2.0) CHECK(big[2][i] <= big[5][i]);     // <= sobolev
  }

  CHECK(run("constants --d-min 5 --d-max 2") == 2);
}

TEST_CASE("shoot command") {
  CHECK(run("shoot --d 1 --p 1.5", "cli_shoot.json") == 0);
  auto j = nlohmann::json::parse(slurp("cli_shoot.json"));
  CHECK(j["h"].get<double>() == doctest::Approx(16.0 / 9.0).epsilon(1e-6));
  CHECK(j["R"].get<double>() == doctest::Approx(2.0 * kPi).epsilon(1e-6));
  CHECK(std::abs(j["res1"].get<double>()) <= 1e-6);
  CHECK(std::abs(j["res2"].get<double>()) <= 1e-6);

  CHECK(run("shoot --d 2 --p 1.2", "cli_shoot2.json") == 0);
  auto j2 = nlohmann::json::parse(slurp("cli_shoot2.json"));
  CHECK(std::abs(j2["res1"].get<double>()) <= 1e-6);
  CHECK(std::abs(j2["res2"].get<double>()) <= 1e-6);

  CHECK(run("shoot --d 1 --p 2.5") == 2);
  CHECK(run("shoot --d 1 --p 1.0") == 2);
}

TEST_CASE("sweep command: |R - pi| strictly decreasing") {
  CHECK(run("sweep --d 1 --p 1.5,1.25,1.1,1.05 --out cli_sweep.csv") == 0);
  auto cols = csv_columns(slurp("cli_sweep.csv"));
  REQUIRE(cols[0].size() == 4);
  double prev = 1e300;
  for (std::size_t i = 0; i < 4; ++i) {
    double gap = std::abs(cols[2][i] - kPi);
    CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("heat command") {
  CHECK(run("heat --d 2 --scenario gaussian --eps 0.01 --t-max 1 --n 6 --out cli_heat.csv") == 0);
  auto cols = csv_columns(slurp("cli_heat.csv"));
  REQUIRE(cols[0].size() == 7);
  for (std::size_t i = 0; i < 7; ++i)
    CHECK(cols[1][i] <= std::min(cols[2][i], cols[3][i]) * (1.0 + 1e-6));

  CHECK(run("heat --d 1 --scenario convolution --t-max 0.5 --n 3 --out cli_conv.csv") == 0);
  CHECK(run("heat --d 2 --scenario convolution") == 2);
  CHECK(run("heat --d 1 --scenario frobnicate") == 2);
}

TEST_CASE("verify command") {
  CHECK(run("verify --d 1 --seed 7 --out cli_verify.json") == 0);
  auto arr = nlohmann::json::parse(slurp("cli_verify.json"));
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 7);  // nash, 2x gn, carlen-loss, poincare, entropy, fourier
  for (const auto& rep : arr) {
    CHECK(rep["pass"].get<bool>());
    CHECK(rep["seed"].get<std::uint64_t>() == 7);
  }
}

TEST_CASE("profile command matches 1 + cos(pi r)") {
  CHECK(run("profile --d 1 --n 1025 --out cli_prof.csv") == 0);
  auto cols = csv_columns(slurp("cli_prof.csv"));
  REQUIRE(cols[0].size() == 1025);
  for (std::size_t i = 0; i < 1025; ++i) {
    double r = cols[0][i];
    CHECK(cols[1][i] == doctest::Approx(1.0 + std::cos(kPi * r)).epsilon(1e-10).scale(1.0));
    CHECK(cols[2][i] == doctest::Approx(-kPi * std::sin(kPi * r)).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("determinism: identical runs give byte-identical files") {
  CHECK(run("constants --d-min 1 --d-max 10 --n 50 --format json --out cli_da.json") == 0);
  CHECK(run("constants --d-min 1 --d-max 10 --n 50 --format json --out cli_db.json") == 0);
  CHECK(slurp("cli_da.json") == slurp("cli_db.json"));

  CHECK(run("verify --d 1 --seed 11 --out cli_va.json") == 0);
  CHECK(run("verify --d 1 --seed 11 --out cli_vb.json") == 0);
  CHECK(slurp("cli_va.json") == slurp("cli_vb.json"));

  // env var override: NASHLAB_SEED wins over --seed
  std::string cmd = "NASHLAB_SEED=11 " + bin() + " verify --d 1 --seed 3 --out cli_vc.json 2>/dev/null";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  CHECK(WEXITSTATUS(rc) == 0);
  CHECK(slurp("cli_vc.json") == slurp("cli_va.json"));
}
