// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef BALLPIT_TOOLS_EXPERIMENTS_HPP
#define BALLPIT_TOOLS_EXPERIMENTS_HPP

#include <optional>
#include <string>
#include <vector>

namespace ballpit::tools {

/// Published reference row for one experiment table: the BPA estimates
/// reported alongside the original method comparison.
struct PublishedRow {
  std::string parameter;
  double mean;
  double std_error;
  double sd;
  double q025, q25, q50, q75, q975;
  std::optional<double> time_seconds;
};

/// Everything needed to rerun one named experiment end to end.
struct ExperimentPreset {
  std::string name;
  std::string model;   // model for the single run; "cauchy" expands to two
  std::string prior;   // empty for cauchy (per-coordinate priors below)
  double sigma2 = 1.0;
  int balls = 80;
  int steps = 1000;
  int warmup = 500;
  int stuck_lag = 10;
  std::uint64_t run_seed = 42;
  // synthetic data (bernoulli/poisson experiments)
  double sim_param = 0.0;    // p or lambda
  std::uint64_t data_seed = 7;
  int data_n = 200;
  std::vector<PublishedRow> published;
};

const std::vector<std::string>& experiment_names();
const ExperimentPreset& experiment_preset(const std::string& name);

}  // namespace ballpit::tools

#endif  // BALLPIT_TOOLS_EXPERIMENTS_HPP
