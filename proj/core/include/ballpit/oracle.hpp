// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef BALLPIT_ORACLE_HPP
#define BALLPIT_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ballpit/dataset.hpp"
#include "ballpit/engine.hpp"
#include "ballpit/model.hpp"
#include "ballpit/prior.hpp"

namespace ballpit {

/// Closed-form conjugate posterior.
struct AnalyticPosterior {
  enum class Family { beta, gamma };
  Family family = Family::beta;
  double a = 1.0;  // beta a     | gamma shape
  double b = 1.0;  // beta b     | gamma rate

  double mean() const;
  double sd() const;
  double cdf(double x) const;
};

/// Bernoulli + beta(a,b)        -> Beta(a + sum x, b + N - sum x)
/// Poisson  + Jeffreys          -> Gamma(sum x + 1/2, rate N), truncation of
///                                 the starting prior ignored.
/// Throws NoConjugateForm for any other pair.
AnalyticPosterior conjugate_posterior(ModelKind kind, const PriorSpec& prior,
                                      const Dataset& data);

/// Quantiles by bisection on the regularized incomplete beta/gamma CDF,
/// absolute tolerance 1e-10.
std::vector<double> analytic_quantiles(const AnalyticPosterior& post,
                                       std::span<const double> probs);

/// Random-walk Metropolis reference sampler.
struct MHConfig {
  double proposal_sd = 1.0;
  long steps = 0;
  long warmup = 0;
  std::uint64_t seed = 0;
};

struct MHResult {
  PooledSample draws;  // post-warmup
  double acceptance_rate = 0.0;
};

/// Gaussian-proposal Metropolis chain targeting log_post, started at init.
MHResult rw_metropolis(const std::function<double(double)>& log_post,
                       double init, const MHConfig& cfg);

}  // namespace ballpit

#endif  // BALLPIT_ORACLE_HPP
