// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#include "ballpit/model.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include "ballpit/errors.hpp"

namespace ballpit {

namespace {

void check_support(const Interval& support, double theta, const char* label) {
  if (!support.contains(theta)) {
    throw OutOfSupport(std::string(label) + ": parameter " +
                       std::to_string(theta) + " outside support");
  }
}

// One Cauchy eta-gradient term, stable for any eta:
// (d^2 - s^2) / (d^2 + s^2) written through r = (d e^{-eta})^2.
double eta_grad_term(double d, double eta) {
  if (d == 0.0) return -1.0;
  const double scaled = d * std::exp(-eta);
  const double r = scaled * scaled;
  if (std::isinf(r)) return 1.0;
  return (r - 1.0) / (r + 1.0);
}

}  // namespace

ModelKind parse_model_kind(std::string_view name) {
  if (name == "bernoulli") return ModelKind::bernoulli;
  if (name == "poisson") return ModelKind::poisson;
  if (name == "cauchy-mu") return ModelKind::cauchy_mu;
  if (name == "cauchy-eta") return ModelKind::cauchy_eta;
  throw ConfigError("unknown model '" + std::string(name) + "'");
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::bernoulli: return "bernoulli";
    case ModelKind::poisson: return "poisson";
    case ModelKind::cauchy_mu: return "cauchy-mu";
    case ModelKind::cauchy_eta: return "cauchy-eta";
  }
  return "?";
}

ModelSpec bernoulli_model(const Dataset& data) {
  require_bernoulli(data);
  const double sum_x = data.sum();
  const double n = static_cast<double>(data.n());
  const Interval support = Interval::open(0.0, 1.0);

  ModelSpec spec;
  spec.support = support;
  spec.label = "bernoulli";
  spec.log_lik = [sum_x, n, support](double theta) {
    check_support(support, theta, "bernoulli");
    return sum_x * std::log(theta) + (n - sum_x) * std::log1p(-theta);
  };
  spec.grad_log_lik = [sum_x, n, support](double theta) {
    check_support(support, theta, "bernoulli");
    return (sum_x - n * theta) / (theta * (1.0 - theta));
  };
  return spec;
}

ModelSpec poisson_model(const Dataset& data) {
  require_poisson(data);
  const double sum_x = data.sum();
  const double n = static_cast<double>(data.n());
  double log_factorials = 0.0;
  for (double x : data.values()) {
    log_factorials += std::lgamma(x + 1.0);
  }
  const Interval support =
      Interval::open(0.0, std::numeric_limits<double>::infinity());

  ModelSpec spec;
  spec.support = support;
  spec.label = "poisson";
  spec.log_lik = [sum_x, n, log_factorials, support](double lambda) {
    check_support(support, lambda, "poisson");
    return -n * lambda + sum_x * std::log(lambda) - log_factorials;
  };
  spec.grad_log_lik = [sum_x, n, support](double lambda) {
    check_support(support, lambda, "poisson");
    return sum_x / lambda - n;
  };
  return spec;
}

ModelSpec cauchy_mu_model(const Dataset& data, double eta_fixed) {
  if (!std::isfinite(eta_fixed)) {
    throw ConfigError("cauchy-mu requires a finite fixed eta");
  }
  const auto values = std::make_shared<std::vector<double>>(data.values());
  const double s = std::exp(eta_fixed);
  const double s2 = s * s;

  ModelSpec spec;
  spec.support = Interval::real_line();
  spec.label = "cauchy-mu";
  spec.log_lik = [values, eta_fixed, s, sup = spec.support](double mu) {
    check_support(sup, mu, "cauchy-mu");
    double total = 0.0;
    for (double x : *values) {
      const double z = (x - mu) / s;
      total += -std::log(std::numbers::pi) - eta_fixed - std::log1p(z * z);
    }
    return total;
  };
  spec.grad_log_lik = [values, s2, sup = spec.support](double mu) {
    check_support(sup, mu, "cauchy-mu");
    double total = 0.0;
    for (double x : *values) {
      const double d = x - mu;
      if (d != 0.0) total += 2.0 * d / (s2 + d * d);
    }
    return total;
  };
  return spec;
}

ModelSpec cauchy_eta_model(const Dataset& data, double mu_fixed) {
  if (!std::isfinite(mu_fixed)) {
    throw ConfigError("cauchy-eta requires a finite fixed mu");
  }
  const auto values = std::make_shared<std::vector<double>>(data.values());

  ModelSpec spec;
  spec.support = Interval::real_line();
  spec.label = "cauchy-eta";
  spec.log_lik = [values, mu_fixed, sup = spec.support](double eta) {
    check_support(sup, eta, "cauchy-eta");
    double total = 0.0;
    for (double x : *values) {
      const double d = x - mu_fixed;
      const double scaled = d == 0.0 ? 0.0 : d * std::exp(-eta);
      total += -std::log(std::numbers::pi) - eta - std::log1p(scaled * scaled);
    }
    return total;
  };
  spec.grad_log_lik = [values, mu_fixed, sup = spec.support](double eta) {
    check_support(sup, eta, "cauchy-eta");
    double total = 0.0;
    for (double x : *values) {
      total += eta_grad_term(x - mu_fixed, eta);
    }
    return total;
  };
  return spec;
}

double cauchy_joint_log_post(const Dataset& data, CauchyParams p) {
  double total = 0.0;
  for (double x : data.values()) {
    const double d = x - p.mu;
    const double scaled = d == 0.0 ? 0.0 : d * std::exp(-p.eta);
    total += -std::log(std::numbers::pi) - p.eta - std::log1p(scaled * scaled);
  }
  return total;
}

CauchyParams cauchy_joint_grad(const Dataset& data, CauchyParams p) {
  const double s = std::exp(p.eta);
  const double s2 = s * s;
  CauchyParams g{0.0, 0.0};
  for (double x : data.values()) {
    const double d = x - p.mu;
    if (d != 0.0) g.mu += 2.0 * d / (s2 + d * d);
    g.eta += eta_grad_term(d, p.eta);
  }
  return g;
}

CauchyParams laplace_mode(const Dataset& data, CauchyParams init) {
  if (!std::isfinite(init.mu) || !std::isfinite(init.eta)) {
    throw ConfigError("laplace_mode requires a finite starting point");
  }
  constexpr int kMaxIter = 10000;
  constexpr double kTol = 1e-8;

  CauchyParams p = init;
  double f = cauchy_joint_log_post(data, p);
  double step = 1.0;  // carried across iterations, grown on success
  for (int iter = 0; iter < kMaxIter; ++iter) {
    const CauchyParams g = cauchy_joint_grad(data, p);
    const double norm2 = g.mu * g.mu + g.eta * g.eta;
    if (std::sqrt(norm2) < kTol) {
      return p;
    }
    while (step > 1e-18) {
      const CauchyParams trial{p.mu + step * g.mu, p.eta + step * g.eta};
      const double ft = cauchy_joint_log_post(data, trial);
      if (ft > f + 1e-4 * step * norm2) {
        p = trial;
        f = ft;
        step = std::min(step * 2.0, 1e4);
        break;
      }
      step *= 0.5;
    }
    if (step <= 1e-18) step = 1.0;
  }
  const CauchyParams g = cauchy_joint_grad(data, p);
  if (!(std::sqrt(g.mu * g.mu + g.eta * g.eta) < 1e-4)) {
    throw NoConvergence("laplace_mode: gradient norm still >= 1e-4 after " +
                        std::to_string(kMaxIter) + " iterations");
  }
  return p;
}

}  // namespace ballpit
