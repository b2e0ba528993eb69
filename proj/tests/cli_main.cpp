// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0
//
// Contract tests for the ballpit binary. The binary path and the plant-height
// fixture come from BALLPIT_CLI and BALLPIT_DARWIN (set by ctest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ballpit/diagnostics.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string cli() {
  const char* p = std::getenv("BALLPIT_CLI");
  REQUIRE_MESSAGE(p != nullptr, "BALLPIT_CLI must point at the binary");
  return p;
}

std::string darwin_fixture() {
  const char* p = std::getenv("BALLPIT_DARWIN");
  REQUIRE_MESSAGE(p != nullptr, "BALLPIT_DARWIN must point at the fixture");
  return p;
}

int run_cli(const std::string& args) {
  const std::string cmd = cli() + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ballpit-cli-tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), ("missing file: " + path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  for (std::string line; std::getline(ss, line);) out.push_back(line);
  return out;
}

json load_json(const fs::path& path) { return json::parse(slurp(path)); }

// draws.csv rows grouped into per-ball chains, file order preserved
std::vector<std::vector<double>> chains_from_draws(const fs::path& path) {
  std::vector<std::vector<double>> chains;
  long last_ball = -1;
  for (const std::string& line : lines_of(slurp(path))) {
    if (line.rfind("ball_id", 0) == 0) continue;
    std::istringstream ss(line);
    std::string ball, step, value;
    REQUIRE(std::getline(ss, ball, ','));
    REQUIRE(std::getline(ss, step, ','));
    REQUIRE(std::getline(ss, value));
    const long b = std::stol(ball);
    if (b != last_ball) {
      chains.emplace_back();
      last_ball = b;
    }
    chains.back().push_back(std::stod(value));
  }
  return chains;
}

}  // namespace

TEST_CASE("simulate: determinism, content, degenerate n") {
  const fs::path dir = fresh_dir("simulate");

  const std::string out1 = (dir / "b1.txt").string();
  const std::string out2 = (dir / "b2.txt").string();
  CHECK(run_cli("simulate bernoulli --p 0.3 --n 200 --seed 7 --out " + out1) ==
        0);
  CHECK(run_cli("simulate bernoulli --p 0.3 --n 200 --seed 7 --out " + out2) ==
        0);
  const std::string body = slurp(out1);
  CHECK(body == slurp(out2));
  const auto ls = lines_of(body);
  CHECK(ls.size() == 200);
  for (const auto& l : ls) CHECK((l == "0" || l == "1"));

  const std::string pois = (dir / "p.txt").string();
  CHECK(run_cli("simulate poisson --lambda 40 --n 200 --seed 3 --out " +
                pois) == 0);
  double total = 0.0;
  for (const auto& l : lines_of(slurp(pois))) total += std::stod(l);
  CHECK(std::fabs(total / 200.0 - 40.0) <= 1.8);

  const std::string empty = (dir / "e.txt").string();
  CHECK(run_cli("simulate bernoulli --p 0.5 --n 0 --seed 1 --out " + empty) ==
        0);
  CHECK(slurp(empty).empty());

  CHECK(run_cli("simulate weibull --n 5 --out " + (dir / "w.txt").string()) ==
        2);
  CHECK(run_cli("simulate poisson --lambda -4 --n 5 --out " +
                (dir / "n.txt").string()) == 2);
}

TEST_CASE("run: error contracts") {
  const fs::path dir = fresh_dir("run-errors");
  const fs::path out = dir / "never";

  CHECK(run_cli("run --model bernoulli --data " + (dir / "nope.txt").string() +
                " --prior beta:1,1 --sigma2 1 --out " + out.string()) == 3);
  CHECK_FALSE(fs::exists(out));

  const std::string data = (dir / "d.txt").string();
  REQUIRE(run_cli("simulate bernoulli --p 0.3 --n 50 --seed 7 --out " + data) ==
          0);
  CHECK(run_cli("run --model bernoulli --data " + data +
                " --prior beta:0,1 --sigma2 1 --out " + out.string()) == 2);
  CHECK(run_cli("run --model bernoulli --data " + data +
                " --prior beta:1,1 --sigma2 1 --warmup 60 --steps 50 --out " +
                out.string()) == 2);
  CHECK(run_cli("run --model cauchy-mu --data " + data +
                " --prior uniform:0,1 --sigma2 1 --out " + out.string()) == 2);
  // a prior stuck outside the support is a sampler failure
  CHECK(run_cli("run --model bernoulli --data " + data +
                " --prior point:5 --sigma2 1 --out " + out.string()) == 4);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("run: outputs, determinism, round-trip, closure") {
  const fs::path dir = fresh_dir("run-ok");
  const std::string data = (dir / "d.txt").string();
  REQUIRE(run_cli("simulate bernoulli --p 0.3 --n 200 --seed 7 --out " +
                  data) == 0);

  const std::string common = "run --model bernoulli --data " + data +
                             " --prior beta:1,1 --sigma2 1 --balls 8"
                             " --steps 200 --warmup 50 --seed 11 --out ";
  const fs::path out1 = dir / "r1";
  const fs::path out2 = dir / "r2";
  const fs::path out3 = dir / "r3";
  REQUIRE(run_cli(common + out1.string()) == 0);
  REQUIRE(run_cli(common + out2.string()) == 0);
  REQUIRE(run_cli(common + out3.string() + " --threads 1") == 0);

  // byte-identical draws for identical config+seed, any thread count
  const std::string draws = slurp(out1 / "draws.csv");
  CHECK(draws == slurp(out2 / "draws.csv"));
  CHECK(draws == slurp(out3 / "draws.csv"));

  // 8 balls x 150 post-warmup steps + header
  CHECK(lines_of(draws).size() == 8 * 150 + 1);
  CHECK(lines_of(draws)[0] == "ball_id,step,value");
  CHECK(lines_of(slurp(out1 / "density.csv")).size() == 101);

  // re-ingesting draws.csv reproduces the summary statistics exactly
  const json j = load_json(out1 / "summary.json");
  const auto chains = chains_from_draws(out1 / "draws.csv");
  REQUIRE(chains.size() == 8);
  const ballpit::PosteriorSummary s = ballpit::summarize_chains(chains);
  CHECK(j["summary"]["mean"].get<double>() == s.mean);
  CHECK(j["summary"]["sd"].get<double>() == s.sd);
  CHECK(j["summary"]["mcse"].get<double>() == s.mcse);
  CHECK(j["summary"]["ess"].get<double>() == s.ess);
  CHECK(j["summary"]["rhat"].get<double>() == s.rhat);
  CHECK(j["summary"]["n"].get<long>() == s.n);
  for (const auto& [key, value] : j["summary"]["quantiles"].items()) {
    CHECK(value.get<double>() == s.quantiles.at(std::stod(key)));
  }

  // the config echo is sufficient to reproduce the run
  const auto& cfg = j["config"];
  std::ostringstream rerun;
  rerun << "run --model " << j["model"].get<std::string>() << " --data "
        << j["data"]["path"].get<std::string>() << " --prior "
        << j["prior"].get<std::string>() << " --balls " << cfg["balls"]
        << " --epsilon " << cfg["epsilon"].get<double>() << " --sigma2 "
        << cfg["sigma2"].get<double>() << " --steps " << cfg["steps"]
        << " --warmup " << cfg["warmup"] << " --stuck-lag "
        << cfg["stuck-lag"] << " --seed " << cfg["seed"] << " --integrator "
        << cfg["integrator"].get<std::string>() << " --out "
        << (dir / "r4").string();
  REQUIRE(run_cli(rerun.str()) == 0);
  CHECK(slurp(dir / "r4" / "draws.csv") == draws);
}

TEST_CASE("run: config file with flag overrides") {
  const fs::path dir = fresh_dir("run-config");
  const std::string data = (dir / "d.txt").string();
  REQUIRE(run_cli("simulate bernoulli --p 0.3 --n 100 --seed 7 --out " +
                  data) == 0);

  const fs::path cfg = dir / "exp.cfg";
  {
    std::ofstream out(cfg);
    out << "model=bernoulli\n"
        << "data=" << data << "\n"
        << "prior=beta:1,1\n"
        << "sigma2=1\n"
        << "balls=4\n"
        << "steps=100\n"
        << "warmup=20\n"
        << "seed=5\n";
  }
  const fs::path out1 = dir / "c1";
  const fs::path out2 = dir / "c2";
  REQUIRE(run_cli("run --config " + cfg.string() + " --out " + out1.string()) ==
          0);
  const json j1 = load_json(out1 / "summary.json");
  CHECK(j1["config"]["balls"].get<int>() == 4);
  CHECK(j1["config"]["seed"].get<std::uint64_t>() == 5);

  // a flag beats the config file value
  REQUIRE(run_cli("run --config " + cfg.string() + " --seed 9 --out " +
                  out2.string()) == 0);
  CHECK(load_json(out2 / "summary.json")["config"]["seed"]
            .get<std::uint64_t>() == 9);
}

TEST_CASE("oracle: analytic, unsupported pairs, MH fallback") {
  const fs::path dir = fresh_dir("oracle");
  const std::string data = (dir / "d.txt").string();
  REQUIRE(run_cli("simulate bernoulli --p 0.3 --n 200 --seed 7 --out " +
                  data) == 0);

  const fs::path out = dir / "o1";
  REQUIRE(run_cli("oracle --model bernoulli --data " + data +
                  " --prior beta:1,1 --out " + out.string()) == 0);
  const json j = load_json(out / "summary.json");
  CHECK(j["method"] == "analytic");
  CHECK(j["posterior"]["family"] == "beta");
  // Beta(1 + sum, 1 + n - sum)
  const double sum = j["data"]["sum"].get<double>();
  CHECK(j["posterior"]["a"].get<double>() == 1.0 + sum);
  CHECK(j["posterior"]["b"].get<double>() == 201.0 - sum);

  const std::string pdata = (dir / "p.txt").string();
  REQUIRE(run_cli("simulate poisson --lambda 40 --n 200 --seed 3 --out " +
                  pdata) == 0);
  CHECK(run_cli("oracle --model poisson --data " + pdata +
                " --prior normal:40,4 --out " + (dir / "o2").string()) == 2);

  const fs::path out3 = dir / "o3";
  REQUIRE(run_cli("oracle --model poisson --data " + pdata +
                  " --prior normal:40,4 --mh --mh-steps 30000 --mh-warmup "
                  "5000 --out " + out3.string()) == 0);
  const json jm = load_json(out3 / "summary.json");
  CHECK(jm["method"] == "mh");
  CHECK(jm["summary"]["n"].get<long>() == 4 * 25000);
  CHECK(std::fabs(jm["summary"]["mean"].get<double>() - 40.0) < 1.0);
}

TEST_CASE("cauchy marginals through the CLI with laplace init") {
  const fs::path dir = fresh_dir("cauchy");
  const fs::path out = dir / "mu";
  REQUIRE(run_cli("run --model cauchy-mu --data " + darwin_fixture() +
                  " --prior uniform:0,100 --sigma2 100 --balls 8 --steps 300"
                  " --warmup 100 --laplace-init --seed 21 --out " +
                  out.string()) == 0);
  const json j = load_json(out / "summary.json");
  CHECK(j["fixed"].contains("eta"));
  CHECK(j["fixed"]["eta"].get<double>() ==
        doctest::Approx(2.754).epsilon(0.01));
  CHECK(j["summary"]["mean"].get<double>() ==
        doctest::Approx(25.0).epsilon(0.2));

  // --fixed and --laplace-init cannot be combined
  CHECK(run_cli("run --model cauchy-eta --data " + darwin_fixture() +
                " --prior uniform:0,6 --sigma2 1 --fixed mu=25 --laplace-init"
                " --out " + (dir / "x").string()) == 2);
}

TEST_CASE("reproduce writes a comparison table") {
  const fs::path dir = fresh_dir("reproduce");
  REQUIRE(run_cli("reproduce bernoulli-uniform --out " + dir.string()) == 0);
  const std::string csv = slurp(dir / "bernoulli-uniform" / "comparison.csv");
  CHECK(csv.find("bpa") != std::string::npos);
  CHECK(csv.find("analytic") != std::string::npos);
  CHECK(csv.find("published-bpa") != std::string::npos);
  const std::string txt = slurp(dir / "bernoulli-uniform" / "comparison.txt");
  CHECK(txt.find("0.3") != std::string::npos);
  CHECK(fs::exists(dir / "bernoulli-uniform" / "bpa" / "draws.csv"));
  CHECK(fs::exists(dir / "bernoulli-uniform" / "oracle" / "summary.json"));

  CHECK(run_cli("reproduce no-such-experiment --out " + dir.string()) == 2);
  CHECK(run_cli("reproduce cauchy --out " + dir.string() + " --data " +
                (dir / "missing.txt").string()) == 3);
}
