// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef BALLPIT_DATASET_HPP
#define BALLPIT_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ballpit/rng.hpp"

namespace ballpit {

/// Immutable vector of scalar observations with cached sufficient statistics.
class Dataset {
 public:
  explicit Dataset(std::vector<double> values);

  /// Reads one numeric value per line. A single leading non-numeric line is
  /// treated as a column header and skipped. Throws InvalidData on missing,
  /// empty, or malformed files.
  static Dataset load(const std::filesystem::path& path);

  const std::vector<double>& values() const { return values_; }
  std::size_t n() const { return values_.size(); }
  double sum() const { return sum_; }
  double mean() const { return sum_ / static_cast<double>(values_.size()); }

 private:
  std::vector<double> values_;
  double sum_ = 0.0;
};

/// Throws InvalidData unless every observation is 0 or 1.
void require_bernoulli(const Dataset& data);

/// Throws InvalidData unless every observation is a nonnegative integer.
void require_poisson(const Dataset& data);

/// n Bernoulli(p) draws as 0/1 values.
std::vector<double> simulate_bernoulli(double p, std::size_t n,
                                       RngStream& stream);

/// n Poisson(lambda) draws. Large rates are split additively so the
/// product-of-uniforms method never underflows.
std::vector<double> simulate_poisson(double lambda, std::size_t n,
                                     RngStream& stream);

}  // namespace ballpit

#endif  // BALLPIT_DATASET_HPP
