// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef BALLPIT_MODEL_HPP
#define BALLPIT_MODEL_HPP

#include <functional>
#include <string>
#include <string_view>

#include "ballpit/dataset.hpp"
#include "ballpit/support.hpp"

namespace ballpit {

/// Scalar model seen by the sampler: full-data log-likelihood, its gradient,
/// and the parameter support. Instances are immutable after construction and
/// safe to share across concurrently running balls.
///
/// log_lik and grad_log_lik throw OutOfSupport when evaluated outside the
/// support interval.
struct ModelSpec {
  std::function<double(double)> log_lik;
  std::function<double(double)> grad_log_lik;
  Interval support;
  std::string label;
};

enum class ModelKind { bernoulli, poisson, cauchy_mu, cauchy_eta };

ModelKind parse_model_kind(std::string_view name);
std::string to_string(ModelKind kind);

/// Location/log-scale pair for the Cauchy model; scale = exp(eta).
struct CauchyParams {
  double mu = 0.0;
  double eta = 0.0;
};

/// Bernoulli success probability theta on (0, 1).
/// log L = sum(x) log(theta) + (N - sum(x)) log(1 - theta).
ModelSpec bernoulli_model(const Dataset& data);

/// Poisson rate lambda on (0, inf).
/// log L = -N lambda + sum(x) log(lambda) - sum(log(x_i!)),
/// the factorial constant precomputed once via lgamma.
ModelSpec poisson_model(const Dataset& data);

/// Cauchy location mu on the real line, log-scale frozen at eta_fixed.
ModelSpec cauchy_mu_model(const Dataset& data, double eta_fixed);

/// Cauchy log-scale eta on the real line, location frozen at mu_fixed.
/// The scale-reciprocal reference prior is flat in eta, so the likelihood
/// gradient is the full posterior gradient in this coordinate.
ModelSpec cauchy_eta_model(const Dataset& data, double mu_fixed);

/// Joint Cauchy log posterior (flat prior in eta) and its gradient.
double cauchy_joint_log_post(const Dataset& data, CauchyParams p);
CauchyParams cauchy_joint_grad(const Dataset& data, CauchyParams p);

/// Posterior mode in (mu, eta) by gradient ascent with backtracking line
/// search. Stops when the gradient norm drops below 1e-8; throws
/// NoConvergence if the 10^4-iteration cap is hit with gradient norm >= 1e-4.
CauchyParams laplace_mode(const Dataset& data, CauchyParams init);

}  // namespace ballpit

#endif  // BALLPIT_MODEL_HPP
