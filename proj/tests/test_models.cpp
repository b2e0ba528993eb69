// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#include "ballpit/model.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

#include "ballpit/errors.hpp"
#include "ballpit/rng.hpp"
#include "testutil.hpp"

using namespace ballpit;
using testutil::bernoulli_dataset;
using testutil::central_diff;
using testutil::darwin_dataset;

namespace {

// Gradients must track central finite differences of the log-likelihood.
void check_grad_matches_fd(const ModelSpec& model, double x) {
  const double g = model.grad_log_lik(x);
  const double fd = central_diff(model.log_lik, x);
  CHECK(std::fabs(g - fd) <= 1e-6 * std::max(1.0, std::fabs(fd)));
}

Dataset poisson_dataset_sum(double total, int n) {
  // n values of floor(total/n) with the remainder spread one unit at a time
  std::vector<double> v(static_cast<std::size_t>(n),
                        std::floor(total / static_cast<double>(n)));
  int rem = static_cast<int>(total - v[0] * n);
  for (int i = 0; i < rem; ++i) v[static_cast<std::size_t>(i)] += 1.0;
  return Dataset(std::move(v));
}

}  // namespace

TEST_CASE("bernoulli gradient and support") {
  const Dataset data = bernoulli_dataset(60, 200);
  const ModelSpec m = bernoulli_model(data);

  CHECK(m.grad_log_lik(60.0 / 200.0) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(m.grad_log_lik(0.5) == doctest::Approx(-160.0));
  CHECK(m.log_lik(0.3) ==
        doctest::Approx(60.0 * std::log(0.3) + 140.0 * std::log(0.7)));

  CHECK_THROWS_AS(m.log_lik(0.0), OutOfSupport);
  CHECK_THROWS_AS(m.log_lik(1.0), OutOfSupport);
  CHECK_THROWS_AS(m.grad_log_lik(-0.1), OutOfSupport);

  CHECK_THROWS_AS(bernoulli_model(Dataset({0.0, 0.5, 1.0})), InvalidData);
}

TEST_CASE("poisson gradient and support") {
  const Dataset data = poisson_dataset_sum(8000, 200);
  REQUIRE(data.sum() == 8000.0);
  const ModelSpec m = poisson_model(data);

  CHECK(m.grad_log_lik(40.0) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(m.grad_log_lik(39.0) == doctest::Approx(8000.0 / 39.0 - 200.0));

  // factorial constant enters the value, not the gradient
  double expect = 0.0;
  for (double x : data.values()) {
    expect += -40.0 + x * std::log(40.0) - std::lgamma(x + 1.0);
  }
  CHECK(m.log_lik(40.0) == doctest::Approx(expect));

  CHECK_THROWS_AS(m.log_lik(0.0), OutOfSupport);
  CHECK_THROWS_AS(m.log_lik(-1.0), OutOfSupport);

  CHECK_THROWS_AS(poisson_model(Dataset({1.0, -2.0})), InvalidData);
  CHECK_THROWS_AS(poisson_model(Dataset({1.5})), InvalidData);
}

TEST_CASE("cauchy location gradient") {
  const ModelSpec sym = cauchy_mu_model(Dataset({-3.0, 3.0}), 0.5);
  CHECK(sym.grad_log_lik(0.0) == doctest::Approx(0.0));

  const ModelSpec single = cauchy_mu_model(Dataset({1.0}), 0.0);
  CHECK(single.grad_log_lik(0.0) == doctest::Approx(1.0));

  const ModelSpec m = cauchy_mu_model(darwin_dataset(), 2.75);
  for (double mu : {0.0, 10.0, 25.0}) check_grad_matches_fd(m, mu);
}

TEST_CASE("cauchy log-scale gradient") {
  // all d_i^2 = s^2 makes every term vanish
  const ModelSpec bal = cauchy_eta_model(Dataset({2.0, -2.0}), 0.0);
  CHECK(bal.grad_log_lik(std::log(2.0)) == doctest::Approx(0.0));

  const ModelSpec single = cauchy_eta_model(Dataset({2.0}), 0.0);
  CHECK(single.grad_log_lik(0.0) == doctest::Approx(0.6));

  const ModelSpec m = cauchy_eta_model(darwin_dataset(), 25.0);
  for (double eta : {1.0, 2.8, 4.0}) check_grad_matches_fd(m, eta);

  // stable far outside the data scale
  CHECK(m.grad_log_lik(700.0) == doctest::Approx(-15.0));
  CHECK(m.grad_log_lik(-700.0) == doctest::Approx(15.0));
}

TEST_CASE("gradients match finite differences at random interior points") {
  RngStream stream(99, 0);
  const ModelSpec bern = bernoulli_model(bernoulli_dataset(57, 200));
  const ModelSpec pois = poisson_model(poisson_dataset_sum(8070, 200));
  const ModelSpec cmu = cauchy_mu_model(darwin_dataset(), 2.75);
  const ModelSpec ceta = cauchy_eta_model(darwin_dataset(), 24.97);
  for (int i = 0; i < 20; ++i) {
    check_grad_matches_fd(bern, 0.05 + 0.9 * stream.uniform());
    check_grad_matches_fd(pois, 1.0 + 99.0 * stream.uniform());
    check_grad_matches_fd(cmu, -20.0 + 90.0 * stream.uniform());
    check_grad_matches_fd(ceta, -1.0 + 6.0 * stream.uniform());
  }
}

TEST_CASE("bernoulli and poisson gradients decrease in the parameter") {
  const ModelSpec bern = bernoulli_model(bernoulli_dataset(57, 200));
  double prev = bern.grad_log_lik(0.005);
  for (int k = 1; k < 100; ++k) {
    const double theta = 0.005 + 0.99 * k / 100.0;
    const double g = bern.grad_log_lik(theta);
    CHECK(g < prev);
    prev = g;
  }
  const ModelSpec pois = poisson_model(poisson_dataset_sum(8070, 200));
  prev = pois.grad_log_lik(0.5);
  for (int k = 1; k < 100; ++k) {
    const double lambda = 0.5 + k;
    const double g = pois.grad_log_lik(lambda);
    CHECK(g < prev);
    prev = g;
  }
}

namespace {

// Brute-force argmax of the joint log posterior over an aligned grid.
CauchyParams grid_mode(const Dataset& data, double mu_lo, double mu_hi,
                       double eta_lo, double eta_hi, double res) {
  CauchyParams best{mu_lo, eta_lo};
  double best_lp = -std::numeric_limits<double>::infinity();
  const int nmu = static_cast<int>(std::round((mu_hi - mu_lo) / res));
  const int neta = static_cast<int>(std::round((eta_hi - eta_lo) / res));
  for (int i = 0; i <= nmu; ++i) {
    const double mu = mu_lo + i * res;
    for (int j = 0; j <= neta; ++j) {
      const CauchyParams p{mu, eta_lo + j * res};
      const double lp = cauchy_joint_log_post(data, p);
      if (lp > best_lp) {
        best_lp = lp;
        best = p;
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("laplace mode: symmetry, termination, and the grid oracle") {
  // a dataset with real curvature in mu converges tightly onto 0
  const Dataset sym4({-2.0, -1.0, 1.0, 2.0});
  const CauchyParams mode4 = laplace_mode(sym4, {0.1, 0.5});
  CHECK(std::fabs(mode4.mu) < 1e-6);

  // two symmetric points have no unique mode: the posterior is exactly flat
  // along the ridge s^2 + mu^2 = a^2, and the ascent lands somewhere on it
  const Dataset sym({-4.0, 4.0});
  const CauchyParams sym_mode = laplace_mode(sym, {0.1, 1.0});
  CHECK(std::exp(2.0 * sym_mode.eta) + sym_mode.mu * sym_mode.mu ==
        doctest::Approx(16.0).epsilon(1e-6));

  const CauchyParams g = cauchy_joint_grad(sym, sym_mode);
  CHECK(std::sqrt(g.mu * g.mu + g.eta * g.eta) < 1e-8);

  const Dataset darwin = darwin_dataset();
  const CauchyParams mode = laplace_mode(darwin, {24.0, 3.0});
  const CauchyParams grid = grid_mode(darwin, 0.0, 60.0, 1.0, 4.0, 0.01);
  // the lattice argmax sits within 1.5 cells of the mode (the surface is
  // tilted in (mu, eta), so the best lattice point is not the nearest one),
  // and the located mode is at least as high as anything the grid found
  CHECK(std::fabs(mode.mu - grid.mu) <= 0.015 + 1e-9);
  CHECK(std::fabs(mode.eta - grid.eta) <= 0.015 + 1e-9);
  CHECK(cauchy_joint_log_post(darwin, mode) >=
        cauchy_joint_log_post(darwin, grid));
}

TEST_CASE("shifting the data shifts the location mode exactly") {
  const Dataset darwin = darwin_dataset();
  const double shift = 7.0;
  std::vector<double> shifted = darwin.values();
  for (double& x : shifted) x += shift;
  const Dataset moved{std::move(shifted)};

  const double res = 0.01;
  const CauchyParams a = grid_mode(darwin, 10.0, 40.0, 2.0, 3.5, res);
  const CauchyParams b = grid_mode(moved, 10.0 + shift, 40.0 + shift, 2.0,
                                   3.5, res);
  CHECK(b.mu - a.mu == doctest::Approx(shift).epsilon(1e-12));
  CHECK(b.eta == doctest::Approx(a.eta).epsilon(1e-12));
}

TEST_CASE("laplace mode error paths") {
  // single Cauchy observation: the likelihood is unbounded in eta, so the
  // ascent cannot reach a stationary point
  CHECK_THROWS_AS(laplace_mode(Dataset({1.0}), {0.0, 0.0}), NoConvergence);
  CHECK_THROWS_AS(
      laplace_mode(darwin_dataset(),
                   {std::numeric_limits<double>::quiet_NaN(), 0.0}),
      ConfigError);
}
