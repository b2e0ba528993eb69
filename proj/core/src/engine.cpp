// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#include "ballpit/engine.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "ballpit/errors.hpp"

namespace ballpit {

namespace {

constexpr int kMaxPriorAttempts = 1000;

double draw_in_support(const PriorSpec& prior, const ModelSpec& model,
                       RngStream& stream) {
  for (int attempt = 0; attempt < kMaxPriorAttempts; ++attempt) {
    const double theta = sample_prior(prior, stream);
    if (model.support.contains(theta)) {
      return theta;
    }
  }
  throw SupportExhausted("1000 draws from " + prior.to_string() +
                         " all fell outside the support of " + model.label);
}

// Fresh position and velocity; resets the rejection counter.
void reseed(BallState& state, const PriorSpec& prior, const ModelSpec& model,
            const RunConfig& config) {
  state.theta = draw_in_support(prior, model, state.rng);
  state.rejections_in_a_row = 0;
  state.velocity = state.rng.normal(0.0, std::sqrt(config.sigma2));
}

}  // namespace

Integrator parse_integrator(std::string_view name) {
  if (name == "semi-implicit") return Integrator::semi_implicit;
  if (name == "forward-euler") return Integrator::forward_euler;
  throw ConfigError("unknown integrator '" + std::string(name) + "'");
}

std::string to_string(Integrator integrator) {
  return integrator == Integrator::semi_implicit ? "semi-implicit"
                                                 : "forward-euler";
}

void RunConfig::validate() const {
  if (n_balls < 1) throw ConfigError("n_balls must be positive");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("epsilon must be a positive finite value");
  }
  if (total_steps < 1) throw ConfigError("total_steps must be positive");
  if (warmup_steps < 0 || warmup_steps >= total_steps) {
    throw ConfigError("warmup_steps must satisfy 0 <= warmup < total_steps");
  }
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw ConfigError("sigma2 must be a positive finite value");
  }
  if (stuck_lag_steps < 1) throw ConfigError("stuck_lag_steps must be >= 1");
}

BallState init_ball(const PriorSpec& prior, const ModelSpec& model,
                    const RunConfig& config, int ball_id) {
  BallState state{0.0, 0.0, 0, RngStream(config.seed,
                                         static_cast<std::uint64_t>(ball_id))};
  state.theta = draw_in_support(prior, model, state.rng);
  state.velocity = state.rng.normal(0.0, std::sqrt(config.sigma2));
  return state;
}

Candidate el_step(const BallState& state, const ModelSpec& model,
                  const RunConfig& config) {
  const double grad = model.grad_log_lik(state.theta);
  if (!std::isfinite(grad)) {
    throw NonFiniteGradient("gradient not finite at theta = " +
                            std::to_string(state.theta));
  }
  if (config.integrator == Integrator::semi_implicit) {
    const double velocity = state.velocity + config.epsilon * config.sigma2 * grad;
    return {state.theta + config.epsilon * velocity, velocity};
  }
  return {state.theta + config.epsilon * state.velocity,
          state.velocity + config.epsilon * config.sigma2 * grad};
}

double log_path_weight(double theta, double velocity, const ModelSpec& model,
                       const RunConfig& config) {
  const double log_lik = model.log_lik(theta);  // throws OutOfSupport
  return -config.epsilon * velocity * velocity / (2.0 * config.sigma2) +
         log_lik;
}

bool accept_candidate(double current_lw, double candidate_lw, double u) {
  if (candidate_lw >= current_lw) return true;
  return u < std::exp(candidate_lw - current_lw);
}

void resample_velocity(BallState& state, const RunConfig& config) {
  state.velocity = state.rng.normal(0.0, std::sqrt(config.sigma2));
}

void handle_rejection(BallState& state, const PriorSpec& prior,
                      const ModelSpec& model, const RunConfig& config,
                      long& reseed_count) {
  state.rejections_in_a_row += 1;
  if (state.rejections_in_a_row >= config.stuck_lag_steps) {
    state.theta = draw_in_support(prior, model, state.rng);
    state.rejections_in_a_row = 0;
    ++reseed_count;
  }
  resample_velocity(state, config);
}

ChainOutput run_ball(int ball_id, const ModelSpec& model,
                     const PriorSpec& prior, const RunConfig& config) {
  config.validate();
  BallState state = init_ball(prior, model, config, ball_id);

  ChainOutput out;
  out.ball_id = ball_id;
  out.samples.reserve(static_cast<std::size_t>(config.total_steps));

  for (int step = 0; step < config.total_steps; ++step) {
    bool have_candidate = true;
    Candidate candidate;
    try {
      candidate = el_step(state, model, config);
    } catch (const NonFiniteGradient&) {
      // The dynamics cannot proceed from here: immediate stuck event.
      reseed(state, prior, model, config);
      ++out.reseed_count;
      have_candidate = false;
    }
    if (have_candidate) {
      if (!model.support.contains(candidate.theta)) {
        // Likelihood undefined at the candidate: keep theta, resample the
        // velocity, and count the step toward the stuck counter.
        handle_rejection(state, prior, model, config, out.reseed_count);
      } else {
        const double current_lw =
            log_path_weight(state.theta, state.velocity, model, config);
        const double candidate_lw = log_path_weight(
            candidate.theta, candidate.velocity, model, config);
        const double u = state.rng.uniform();
        if (accept_candidate(current_lw, candidate_lw, u)) {
          state.theta = candidate.theta;
          state.velocity = candidate.velocity;
          state.rejections_in_a_row = 0;
          ++out.acceptance_count;
        } else {
          handle_rejection(state, prior, model, config, out.reseed_count);
        }
      }
    }
    out.samples.push_back(state.theta);
  }
  return out;
}

EnsembleResult run_ensemble(const ModelSpec& model, const PriorSpec& prior,
                            const RunConfig& config, int threads) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();

  EnsembleResult result;
  result.chains.resize(static_cast<std::size_t>(config.n_balls));

  int workers = threads > 0
                    ? threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > config.n_balls) workers = config.n_balls;

  std::atomic<int> next_ball{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      const int ball_id = next_ball.fetch_add(1);
      if (ball_id >= config.n_balls) return;
      try {
        result.chains[static_cast<std::size_t>(ball_id)] =
            run_ball(ball_id, model, prior, config);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          try {
            std::throw_with_nested(
                Error("ball " + std::to_string(ball_id) + " failed"));
          } catch (...) {
            failure = std::current_exception();
          }
        }
        return;
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  const std::size_t kept =
      static_cast<std::size_t>(config.total_steps - config.warmup_steps);
  result.pooled.values.reserve(kept *
                               static_cast<std::size_t>(config.n_balls));
  for (const ChainOutput& chain : result.chains) {
    result.pooled.values.insert(
        result.pooled.values.end(),
        chain.samples.begin() + config.warmup_steps, chain.samples.end());
  }

  result.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

}  // namespace ballpit
