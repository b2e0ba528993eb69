// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#include "ballpit/prior.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "ballpit/errors.hpp"
#include "testutil.hpp"

using ballpit::InvalidPrior;
using ballpit::PriorSpec;
using ballpit::RngStream;

namespace {

std::vector<double> draw(const PriorSpec& prior, int n, std::uint64_t seed) {
  RngStream stream(seed, 0);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (auto& v : out) v = ballpit::sample_prior(prior, stream);
  return out;
}

}  // namespace

TEST_CASE("grammar round-trips and rejects junk") {
  for (const char* text :
       {"beta:1,1", "beta:3,7", "uniform:0,100", "normal:40,4",
        "jeffreys-poisson:0,100", "point:0.3"}) {
    const PriorSpec p = PriorSpec::parse(text);
    const PriorSpec q = PriorSpec::parse(p.to_string());
    CHECK(p.family == q.family);
    CHECK(p.p1 == q.p1);
    CHECK(p.p2 == q.p2);
  }
  CHECK_THROWS_AS(PriorSpec::parse("beta"), InvalidPrior);
  CHECK_THROWS_AS(PriorSpec::parse("beta:1"), InvalidPrior);
  CHECK_THROWS_AS(PriorSpec::parse("beta:1,2,3"), InvalidPrior);
  CHECK_THROWS_AS(PriorSpec::parse("beta:a,b"), InvalidPrior);
  CHECK_THROWS_AS(PriorSpec::parse("cauchy:0,1"), InvalidPrior);
  CHECK_THROWS_AS(PriorSpec::parse("uniform:5,5"), InvalidPrior);
  CHECK_THROWS_AS(PriorSpec::parse("normal:0,-1"), InvalidPrior);
  CHECK_THROWS_AS(PriorSpec::parse("jeffreys-poisson:-1,10"), InvalidPrior);
  CHECK_THROWS_AS(PriorSpec::parse("beta:0,1"), InvalidPrior);
}

TEST_CASE("point mass always returns its value") {
  const PriorSpec p = PriorSpec::parse("point:0.3");
  for (double v : draw(p, 100, 9)) CHECK(v == 0.3);
}

TEST_CASE("uniform(0,1) mean over 1e5 draws") {
  const auto xs = draw(PriorSpec::parse("uniform:0,1"), 100000, 11);
  const double m = testutil::mean(xs);
  CHECK(m >= 0.496);
  CHECK(m <= 0.504);
}

TEST_CASE("truncated Jeffreys empirical CDF at the median") {
  const auto xs = draw(PriorSpec::parse("jeffreys-poisson:0,100"), 100000, 13);
  // F(25) = sqrt(25)/sqrt(100) = 0.5
  double below = 0.0;
  for (double x : xs) below += x <= 25.0;
  CHECK(std::fabs(below / 100000.0 - 0.5) <= 0.006);
}

TEST_CASE("log densities") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(ballpit::log_density(PriorSpec::parse("uniform:0,1"), 0.5) == 0.0);
  CHECK(ballpit::log_density(PriorSpec::parse("uniform:0,1"), 1.5) == -inf);

  const PriorSpec j = PriorSpec::parse("jeffreys-poisson:0,100");
  CHECK(ballpit::log_density(j, 4.0) - ballpit::log_density(j, 16.0) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));

  CHECK(ballpit::log_density(PriorSpec::parse("beta:3,7"), 0.0) == -inf);

  const PriorSpec n = PriorSpec::parse("normal:2,4");
  CHECK(ballpit::log_density(n, 4.0) == doctest::Approx(-0.5));

  const PriorSpec pt = PriorSpec::parse("point:0.3");
  CHECK(ballpit::log_density(pt, 0.3) == 0.0);
  CHECK(ballpit::log_density(pt, 0.4) == -inf);
}

TEST_CASE("samples stay inside the (possibly truncated) support") {
  for (const char* text :
       {"beta:3,7", "uniform:-2,5", "jeffreys-poisson:1,50", "point:4"}) {
    const PriorSpec p = PriorSpec::parse(text);
    double lo = p.p1;
    double hi = p.p2;
    if (p.family == PriorSpec::Family::beta) {
      lo = 0.0;
      hi = 1.0;
    }
    if (p.family == PriorSpec::Family::point) hi = lo;
    for (double v : draw(p, 2000, 17)) {
      CHECK(v >= lo);
      CHECK(v <= hi);
    }
  }
}

TEST_CASE("KS against closed-form CDFs at 0.02 on 1e4 draws") {
  auto unif_cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
  CHECK(testutil::ks_statistic(draw(PriorSpec::parse("uniform:0,1"), 10000, 21),
                               unif_cdf) < 0.02);

  auto jeffreys_cdf = [](double x) {
    return std::clamp(std::sqrt(x) / 10.0, 0.0, 1.0);
  };
  CHECK(testutil::ks_statistic(
            draw(PriorSpec::parse("jeffreys-poisson:0,100"), 10000, 23),
            jeffreys_cdf) < 0.02);

  // Beta(1,1) is indistinguishable from uniform at the same threshold.
  CHECK(testutil::ks_statistic(draw(PriorSpec::parse("beta:1,1"), 10000, 25),
                               unif_cdf) < 0.02);
}
