// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#include "ballpit/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ballpit/errors.hpp"

namespace ballpit {

Dataset::Dataset(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw InvalidData("dataset is empty");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw InvalidData("dataset contains a non-finite value");
    }
    sum_ += v;
  }
}

Dataset Dataset::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidData("cannot open data file: " + path.string());
  }
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (!trimmed.empty()) trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    if (trimmed.empty()) continue;
    std::istringstream ss(trimmed);
    double v = 0.0;
    if (ss >> v && (ss >> std::ws).eof()) {
      values.push_back(v);
    } else if (lineno == 1) {
      continue;  // single-column header
    } else {
      throw InvalidData("unparseable value at " + path.string() + ":" +
                        std::to_string(lineno));
    }
  }
  if (values.empty()) {
    throw InvalidData("no observations in " + path.string());
  }
  return Dataset(std::move(values));
}

void require_bernoulli(const Dataset& data) {
  for (double v : data.values()) {
    if (v != 0.0 && v != 1.0) {
      throw InvalidData("Bernoulli data must be 0 or 1");
    }
  }
}

void require_poisson(const Dataset& data) {
  for (double v : data.values()) {
    if (!(v >= 0.0) || v != std::floor(v)) {
      throw InvalidData("Poisson data must be nonnegative integers");
    }
  }
}

std::vector<double> simulate_bernoulli(double p, std::size_t n,
                                       RngStream& stream) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError("Bernoulli probability must be in [0, 1]");
  }
  std::vector<double> out(n);
  for (auto& v : out) {
    v = stream.uniform() < p ? 1.0 : 0.0;
  }
  return out;
}

namespace {

// Product-of-uniforms Poisson; valid while exp(-lambda) stays normal.
double poisson_small(double lambda, RngStream& stream) {
  const double limit = std::exp(-lambda);
  double prod = 1.0;
  double count = -1.0;
  do {
    prod *= stream.uniform_pos();
    count += 1.0;
  } while (prod > limit);
  return count;
}

}  // namespace

std::vector<double> simulate_poisson(double lambda, std::size_t n,
                                     RngStream& stream) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ConfigError("Poisson rate must be a finite nonnegative value");
  }
  std::vector<double> out(n);
  for (auto& v : out) {
    double remaining = lambda;
    double total = 0.0;
    while (remaining > 60.0) {
      total += poisson_small(60.0, stream);
      remaining -= 60.0;
    }
    if (remaining > 0.0) total += poisson_small(remaining, stream);
    v = total;
  }
  return out;
}

}  // namespace ballpit
