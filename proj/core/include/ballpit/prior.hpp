// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef BALLPIT_PRIOR_HPP
#define BALLPIT_PRIOR_HPP

#include <string>
#include <string_view>

#include "ballpit/rng.hpp"

namespace ballpit {

/// Sampleable starting/reseed distribution for ball positions.
///
/// Families and their CLI grammar:
///   beta:a,b | uniform:lo,hi | normal:mean,var | jeffreys-poisson:lo,hi |
///   point:v
///
/// jeffreys-poisson is the improper density proportional to lambda^(-1/2);
/// it is only sampleable on a finite truncation interval, so bounds are
/// mandatory for it.
struct PriorSpec {
  enum class Family { beta, uniform, normal, jeffreys_poisson, point };

  Family family = Family::uniform;
  double p1 = 0.0;  // beta a | uniform lo | normal mean | jeffreys lo | value
  double p2 = 1.0;  // beta b | uniform hi | normal var  | jeffreys hi

  bool proper() const { return family != Family::jeffreys_poisson; }

  /// Throws InvalidPrior when the family's parameter constraints fail.
  void validate() const;

  static PriorSpec parse(std::string_view text);
  std::string to_string() const;
};

/// One draw from the prior using the caller's stream.
double sample_prior(const PriorSpec& prior, RngStream& stream);

/// Unnormalized log density; flat families return 0 inside their support and
/// -infinity outside. Used for reporting only, never in the acceptance rule.
double log_density(const PriorSpec& prior, double theta);

}  // namespace ballpit

#endif  // BALLPIT_PRIOR_HPP
