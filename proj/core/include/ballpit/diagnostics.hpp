// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef BALLPIT_DIAGNOSTICS_HPP
#define BALLPIT_DIAGNOSTICS_HPP

#include <map>
#include <span>
#include <vector>

#include "ballpit/engine.hpp"

namespace ballpit {

/// Posterior summary over pooled post-warmup draws.
///
/// mcse uses batch means with each ball's post-warmup chain as one batch:
/// sd(ball means) / sqrt(#balls). Quantiles interpolate linearly between
/// order statistics with plotting positions (k-1)/(n-1). rhat is the split
/// potential-scale-reduction over the per-ball chains, each split in half.
/// ess is the Geyer initial-positive-sequence estimator with cross-chain
/// averaged autocovariances.
struct PosteriorSummary {
  double mean = 0.0;
  double mcse = 0.0;
  double sd = 0.0;
  std::map<double, double> quantiles;  // keys 0.025, 0.25, 0.5, 0.75, 0.975
  double ess = 0.0;
  double rhat = 0.0;
  long n = 0;
  double runtime_seconds = 0.0;
};

inline constexpr double kSummaryProbs[] = {0.025, 0.25, 0.5, 0.75, 0.975};

/// Single quantile by linear interpolation of order statistics; data need not
/// be sorted. p is clamped to [0, 1].
double quantile(std::span<const double> data, double p);

/// Several quantiles with one sort.
std::vector<double> quantiles(std::span<const double> data,
                              std::span<const double> probs);

/// Summary from per-ball post-warmup chains. Throws InsufficientData when
/// there are no draws or fewer than two chains.
PosteriorSummary summarize_chains(
    const std::vector<std::vector<double>>& post_warmup_chains,
    double runtime_seconds = 0.0);

/// Summary from an ensemble run; slices off warmup_steps from each chain and
/// checks the pooled sample is consistent with the slices.
PosteriorSummary summarize(const PooledSample& pooled,
                           const std::vector<ChainOutput>& chains,
                           int warmup_steps, double runtime_seconds = 0.0);

/// Discrete action of a recorded trajectory:
/// sum over consecutive samples of  thdot^2/(2 sigma2) - log L(theta_i)
/// with thdot = (theta_i - theta_{i-1}) / epsilon. An out-of-support point
/// makes the action +infinity.
double trajectory_action(const ChainOutput& traj, const ModelSpec& model,
                         const RunConfig& config);

}  // namespace ballpit

#endif  // BALLPIT_DIAGNOSTICS_HPP
