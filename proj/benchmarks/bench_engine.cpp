// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <vector>

#include "ballpit/dataset.hpp"
#include "ballpit/diagnostics.hpp"
#include "ballpit/engine.hpp"
#include "ballpit/model.hpp"
#include "ballpit/prior.hpp"
#include "ballpit/rng.hpp"

namespace {

using namespace ballpit;

Dataset bench_data() {
  RngStream stream(7, 0);
  return Dataset(simulate_bernoulli(0.3, 200, stream));
}

RunConfig bench_config(int balls) {
  RunConfig c;
  c.n_balls = balls;
  c.epsilon = 0.01;
  c.total_steps = 1000;
  c.warmup_steps = 500;
  c.sigma2 = 1.0;
  c.stuck_lag_steps = 10;
  c.seed = 42;
  c.integrator = Integrator::forward_euler;
  return c;
}

void BM_ElStep(benchmark::State& state) {
  const Dataset data = bench_data();
  const ModelSpec model = bernoulli_model(data);
  const RunConfig config = bench_config(1);
  BallState s{0.3, 0.1, 0, RngStream(1, 0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(el_step(s, model, config));
  }
}
BENCHMARK(BM_ElStep);

void BM_RunBall(benchmark::State& state) {
  const Dataset data = bench_data();
  const ModelSpec model = bernoulli_model(data);
  const PriorSpec prior = PriorSpec::parse("beta:1,1");
  const RunConfig config = bench_config(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_ball(0, model, prior, config));
  }
  state.SetItemsProcessed(state.iterations() * config.total_steps);
}
BENCHMARK(BM_RunBall);

void BM_EnsemblePaperScale(benchmark::State& state) {
  const Dataset data = bench_data();
  const ModelSpec model = bernoulli_model(data);
  const PriorSpec prior = PriorSpec::parse("beta:1,1");
  const RunConfig config = bench_config(80);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_ensemble(model, prior, config, threads));
  }
  state.SetItemsProcessed(state.iterations() * 80 * config.total_steps);
}
BENCHMARK(BM_EnsemblePaperScale)->Arg(1)->Arg(4);

void BM_Summarize(benchmark::State& state) {
  const Dataset data = bench_data();
  const ModelSpec model = bernoulli_model(data);
  const PriorSpec prior = PriorSpec::parse("beta:1,1");
  const RunConfig config = bench_config(80);
  const EnsembleResult r = run_ensemble(model, prior, config, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        summarize(r.pooled, r.chains, config.warmup_steps));
  }
}
BENCHMARK(BM_Summarize);

}  // namespace

BENCHMARK_MAIN();
