// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#include "ballpit/oracle.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>

#include "ballpit/errors.hpp"

namespace ballpit {

double AnalyticPosterior::mean() const {
  return family == Family::beta ? a / (a + b) : a / b;
}

double AnalyticPosterior::sd() const {
  if (family == Family::beta) {
    return std::sqrt(a * b / ((a + b) * (a + b) * (a + b + 1.0)));
  }
  return std::sqrt(a) / b;
}

double AnalyticPosterior::cdf(double x) const {
  if (family == Family::beta) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return boost::math::ibeta(a, b, x);
  }
  if (x <= 0.0) return 0.0;
  return boost::math::gamma_p(a, b * x);
}

AnalyticPosterior conjugate_posterior(ModelKind kind, const PriorSpec& prior,
                                      const Dataset& data) {
  if (kind == ModelKind::bernoulli &&
      prior.family == PriorSpec::Family::beta) {
    require_bernoulli(data);
    const double n = static_cast<double>(data.n());
    return {AnalyticPosterior::Family::beta, prior.p1 + data.sum(),
            prior.p2 + n - data.sum()};
  }
  if (kind == ModelKind::poisson &&
      prior.family == PriorSpec::Family::jeffreys_poisson) {
    require_poisson(data);
    return {AnalyticPosterior::Family::gamma, data.sum() + 0.5,
            static_cast<double>(data.n())};
  }
  throw NoConjugateForm("no closed-form posterior for " + to_string(kind) +
                        " with prior " + prior.to_string());
}

std::vector<double> analytic_quantiles(const AnalyticPosterior& post,
                                       std::span<const double> probs) {
  constexpr double kTol = 1e-10;
  std::vector<double> out;
  out.reserve(probs.size());
  for (double p : probs) {
    if (!(p > 0.0 && p < 1.0)) {
      throw ConfigError("quantile probabilities must lie in (0, 1)");
    }
    double lo = 0.0;
    double hi;
    if (post.family == AnalyticPosterior::Family::beta) {
      hi = 1.0;
    } else {
      hi = post.mean() + 10.0 * post.sd() + 1.0;
      while (post.cdf(hi) < p) hi *= 2.0;
    }
    while (hi - lo > kTol) {
      const double mid = 0.5 * (lo + hi);
      (post.cdf(mid) < p ? lo : hi) = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

MHResult rw_metropolis(const std::function<double(double)>& log_post,
                       double init, const MHConfig& cfg) {
  if (cfg.steps < 1 || cfg.warmup < 0 || cfg.warmup >= cfg.steps) {
    throw ConfigError("rw_metropolis requires 0 <= warmup < steps");
  }
  if (!(cfg.proposal_sd > 0.0)) {
    throw ConfigError("rw_metropolis requires proposal_sd > 0");
  }
  RngStream stream(cfg.seed, 0);
  double x = init;
  double lp = log_post(x);
  if (!std::isfinite(lp)) {
    throw ConfigError("rw_metropolis: log posterior not finite at init");
  }

  MHResult result;
  result.draws.values.reserve(static_cast<std::size_t>(cfg.steps - cfg.warmup));
  long accepted = 0;
  for (long step = 0; step < cfg.steps; ++step) {
    const double proposal = x + stream.normal(0.0, cfg.proposal_sd);
    const double lq = log_post(proposal);
    if (std::log(stream.uniform_pos()) < lq - lp) {
      x = proposal;
      lp = lq;
      ++accepted;
    }
    if (step >= cfg.warmup) result.draws.values.push_back(x);
  }
  result.acceptance_rate =
      static_cast<double>(accepted) / static_cast<double>(cfg.steps);
  return result;
}

}  // namespace ballpit
