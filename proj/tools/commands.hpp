// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef BALLPIT_TOOLS_COMMANDS_HPP
#define BALLPIT_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <set>
#include <string>

namespace ballpit::tools {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitSampler = 4;

struct RunOptions {
  std::string model;
  std::string data_path;
  std::string prior;
  bool have_sigma2 = false;
  int balls = 80;
  double epsilon = 0.01;
  double sigma2 = 1.0;
  int steps = 1000;
  int warmup = 500;
  int stuck_lag = 10;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string out_dir = "out";
  std::string integrator = "semi-implicit";
  std::string fixed;  // "eta=<v>" or "mu=<v>" for the Cauchy marginals
  bool laplace_init = false;

  // flat key=value file mirroring the flag names; explicit flags win
  std::string config_file;
  std::set<std::string> flags_given;
};

struct OracleOptions {
  std::string model;
  std::string data_path;
  std::string prior;
  std::string out_dir = "out";
  bool use_mh = false;
  double mh_proposal_sd = 0.0;  // 0 picks a per-model default
  long mh_steps = 150000;
  long mh_warmup = 25000;
  std::uint64_t seed = 1;
  std::string fixed;
  bool laplace_init = false;
};

struct SimulateOptions {
  std::string distribution;  // bernoulli | poisson
  double p = 0.3;
  double lambda = 40.0;
  long n = 0;
  std::uint64_t seed = 0;
  std::string out_path;
};

struct ReproduceOptions {
  std::string experiment;
  std::string out_dir = "reproduce-out";
  std::string cauchy_data = "data/darwin_heights.txt";
  int threads = 0;
};

int cmd_run(const RunOptions& opt);
int cmd_oracle(const OracleOptions& opt);
int cmd_simulate(const SimulateOptions& opt);
int cmd_reproduce(const ReproduceOptions& opt);

}  // namespace ballpit::tools

#endif  // BALLPIT_TOOLS_COMMANDS_HPP
