// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#include "ballpit/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ballpit/errors.hpp"

namespace ballpit {

namespace {

double mean_of(std::span<const double> xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) /
         static_cast<double>(xs.size());
}

// Unbiased sample variance (n-1 denominator); 0 for n < 2.
double variance_of(std::span<const double> xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : xs) {
    const double d = x - mean;
    ss += d * d;
  }
  return ss / static_cast<double>(xs.size() - 1);
}

double sorted_quantile(const std::vector<double>& sorted, double p) {
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  p = std::clamp(p, 0.0, 1.0);
  const double h = p * static_cast<double>(n - 1);
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= n) return sorted[n - 1];
  const double w = h - static_cast<double>(lo);
  return sorted[lo] + w * (sorted[lo + 1] - sorted[lo]);
}

// Split potential scale reduction; each chain contributes its two halves.
double split_rhat(const std::vector<std::vector<double>>& chains) {
  std::vector<std::vector<double>> halves;
  for (const auto& chain : chains) {
    const std::size_t half = chain.size() / 2;
    if (half < 2) return std::numeric_limits<double>::quiet_NaN();
    halves.emplace_back(chain.begin(), chain.begin() + half);
    halves.emplace_back(chain.end() - half, chain.end());
  }
  const double n = static_cast<double>(halves.front().size());
  std::vector<double> means;
  std::vector<double> vars;
  for (const auto& h : halves) {
    const double m = mean_of(h);
    means.push_back(m);
    vars.push_back(variance_of(h, m));
  }
  const double within = mean_of(vars);
  const double between_over_n = variance_of(means, mean_of(means));
  if (within <= 0.0) return 1.0;
  const double var_plus = (n - 1.0) / n * within + between_over_n;
  return std::sqrt(var_plus / within);
}

// Geyer initial-positive-sequence effective sample size with autocovariances
// averaged across chains.
double ess_ips(const std::vector<std::vector<double>>& chains) {
  const std::size_t m = chains.size();
  const std::size_t n = chains.front().size();
  double total = static_cast<double>(m * n);
  if (n < 4) return total;

  std::vector<double> means(m);
  std::vector<double> vars(m);
  for (std::size_t j = 0; j < m; ++j) {
    means[j] = mean_of(chains[j]);
    vars[j] = variance_of(chains[j], means[j]);
  }
  const double within = mean_of(vars);
  const double between = variance_of(means, mean_of(means));
  const double var_plus =
      (static_cast<double>(n) - 1.0) / static_cast<double>(n) * within +
      between;
  if (var_plus <= 0.0) return total;

  auto avg_autocov = [&](std::size_t lag) {
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const auto& c = chains[j];
      double s = 0.0;
      for (std::size_t i = lag; i < n; ++i) {
        s += (c[i] - means[j]) * (c[i - lag] - means[j]);
      }
      acc += s / static_cast<double>(n);
    }
    return acc / static_cast<double>(m);
  };

  auto rho = [&](std::size_t t) {
    return t == 0 ? 1.0 : 1.0 - (within - avg_autocov(t)) / var_plus;
  };

  // Sum pair terms (rho_{2k} + rho_{2k+1}) while they stay positive.
  double gamma_sum = 0.0;
  for (std::size_t k = 0; 2 * k + 1 < n; ++k) {
    const double pair = rho(2 * k) + rho(2 * k + 1);
    if (pair <= 0.0) break;
    gamma_sum += pair;
  }
  const double tau = std::max(2.0 * gamma_sum - 1.0, 1e-2);
  return total / tau;
}

}  // namespace

double quantile(std::span<const double> data, double p) {
  if (data.empty()) throw InsufficientData("quantile of an empty sample");
  std::vector<double> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted_quantile(sorted, p);
}

std::vector<double> quantiles(std::span<const double> data,
                              std::span<const double> probs) {
  if (data.empty()) throw InsufficientData("quantile of an empty sample");
  std::vector<double> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> out;
  out.reserve(probs.size());
  for (double p : probs) out.push_back(sorted_quantile(sorted, p));
  return out;
}

PosteriorSummary summarize_chains(
    const std::vector<std::vector<double>>& post_warmup_chains,
    double runtime_seconds) {
  std::size_t total = 0;
  for (const auto& c : post_warmup_chains) total += c.size();
  if (total == 0) {
    throw InsufficientData("summarize: no post-warmup draws");
  }
  if (post_warmup_chains.size() < 2) {
    throw InsufficientData("summarize: need at least 2 chains");
  }
  for (const auto& c : post_warmup_chains) {
    if (c.size() != post_warmup_chains.front().size()) {
      throw InsufficientData("summarize: chains must have equal length");
    }
  }

  std::vector<double> pooled;
  pooled.reserve(total);
  for (const auto& c : post_warmup_chains) {
    pooled.insert(pooled.end(), c.begin(), c.end());
  }

  PosteriorSummary s;
  s.n = static_cast<long>(total);
  s.runtime_seconds = runtime_seconds;
  s.mean = mean_of(pooled);
  s.sd = std::sqrt(variance_of(pooled, s.mean));

  std::vector<double> ball_means;
  ball_means.reserve(post_warmup_chains.size());
  for (const auto& c : post_warmup_chains) {
    if (c.empty()) throw InsufficientData("summarize: empty chain");
    ball_means.push_back(mean_of(c));
  }
  s.mcse = std::sqrt(variance_of(ball_means, mean_of(ball_means)) /
                     static_cast<double>(ball_means.size()));

  const std::vector<double> qs = quantiles(pooled, kSummaryProbs);
  for (std::size_t i = 0; i < std::size(kSummaryProbs); ++i) {
    s.quantiles[kSummaryProbs[i]] = qs[i];
  }

  s.rhat = split_rhat(post_warmup_chains);
  s.ess = ess_ips(post_warmup_chains);
  return s;
}

PosteriorSummary summarize(const PooledSample& pooled,
                           const std::vector<ChainOutput>& chains,
                           int warmup_steps, double runtime_seconds) {
  std::vector<std::vector<double>> post;
  post.reserve(chains.size());
  std::size_t total = 0;
  for (const ChainOutput& chain : chains) {
    if (warmup_steps < 0 ||
        static_cast<std::size_t>(warmup_steps) >= chain.samples.size()) {
      throw InsufficientData("summarize: warmup covers the whole chain");
    }
    post.emplace_back(chain.samples.begin() + warmup_steps,
                      chain.samples.end());
    total += post.back().size();
  }
  if (total != pooled.values.size()) {
    throw InsufficientData("summarize: pooled size disagrees with chains");
  }
  return summarize_chains(post, runtime_seconds);
}

double trajectory_action(const ChainOutput& traj, const ModelSpec& model,
                         const RunConfig& config) {
  const auto& s = traj.samples;
  if (s.size() < 2) {
    throw InsufficientData("trajectory_action needs at least 2 samples");
  }
  double action = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!model.support.contains(s[i]) || !model.support.contains(s[i - 1])) {
      return std::numeric_limits<double>::infinity();
    }
    const double thdot = (s[i] - s[i - 1]) / config.epsilon;
    action += thdot * thdot / (2.0 * config.sigma2) - model.log_lik(s[i]);
  }
  return action;
}

}  // namespace ballpit
