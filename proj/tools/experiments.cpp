// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#include "experiments.hpp"

#include <stdexcept>

#include "ballpit/errors.hpp"

namespace ballpit::tools {

namespace {

// Published reference estimates for the BPA rows of each experiment table.
const std::vector<ExperimentPreset> kPresets = {
    {
        .name = "bernoulli-uniform",
        .model = "bernoulli",
        .prior = "beta:1,1",
        .sigma2 = 1.0,
        .sim_param = 0.3,
        .published = {{"theta", 0.30, 0.01, 0.03, 0.25, 0.28, 0.30, 0.32,
                       0.36, 0.71}},
    },
    {
        .name = "bernoulli-beta37",
        .model = "bernoulli",
        .prior = "beta:3,7",
        .sigma2 = 1.0,
        .sim_param = 0.3,
        .published = {{"theta", 0.30, 0.01, 0.03, 0.25, 0.28, 0.30, 0.32,
                       0.37, 0.63}},
    },
    {
        .name = "poisson-jeffreys",
        .model = "poisson",
        .prior = "jeffreys-poisson:0,100",
        .sigma2 = 100.0,
        .sim_param = 40.0,
        .published = {{"lambda", 40.34, 0.08, 0.40, 39.58, 40.04, 40.34,
                       40.64, 41.08, 1.17}},
    },
    {
        .name = "poisson-normal",
        .model = "poisson",
        .prior = "",  // normal:<sample mean>,4; mean filled in at run time
        .sigma2 = 100.0,
        .sim_param = 40.0,
        .published = {{"lambda", 40.32, 0.09, 0.39, 39.60, 40.04, 40.33,
                       40.61, 41.05, 1.06}},
    },
    {
        .name = "cauchy",
        .model = "cauchy",
        .prior = "",
        .balls = 100,
        .published =
            {
                {"mu", 25.1, 0.45, 5.20, 15.50, 21.34, 25.02, 28.71, 35.44,
                 std::nullopt},
                {"eta", 2.84, 0.10, 0.66, 2.00, 2.50, 2.79, 3.06, 3.79,
                 std::nullopt},
            },
    },
};

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : kPresets) out.push_back(p.name);
    return out;
  }();
  return names;
}

const ExperimentPreset& experiment_preset(const std::string& name) {
  for (const auto& p : kPresets) {
    if (p.name == name) return p;
  }
  throw ConfigError("unknown experiment '" + name + "'");
}

}  // namespace ballpit::tools
