// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#include "ballpit/prior.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "ballpit/errors.hpp"

namespace ballpit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> parse_params(std::string_view text,
                                 std::string_view family) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
      throw InvalidPrior("bad parameter '" + std::string(tok) + "' for " +
                         std::string(family));
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

void PriorSpec::validate() const {
  switch (family) {
    case Family::beta:
      if (!(p1 > 0.0) || !(p2 > 0.0)) {
        throw InvalidPrior("beta requires a > 0 and b > 0");
      }
      break;
    case Family::uniform:
      if (!(p1 < p2) || !std::isfinite(p1) || !std::isfinite(p2)) {
        throw InvalidPrior("uniform requires finite lo < hi");
      }
      break;
    case Family::normal:
      if (!(p2 > 0.0) || !std::isfinite(p1) || !std::isfinite(p2)) {
        throw InvalidPrior("normal requires finite mean and variance > 0");
      }
      break;
    case Family::jeffreys_poisson:
      // Truncation is mandatory; the untruncated density is improper.
      if (!(p1 >= 0.0) || !(p1 < p2) || !std::isfinite(p2)) {
        throw InvalidPrior("jeffreys-poisson requires 0 <= lo < hi < inf");
      }
      break;
    case Family::point:
      if (!std::isfinite(p1)) {
        throw InvalidPrior("point requires a finite value");
      }
      break;
  }
}

PriorSpec PriorSpec::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidPrior("prior must look like family:params, got '" +
                       std::string(text) + "'");
  }
  const std::string_view name = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  const std::vector<double> params = parse_params(rest, name);

  PriorSpec spec;
  auto expect = [&](std::size_t k) {
    if (params.size() != k) {
      throw InvalidPrior(std::string(name) + " expects " + std::to_string(k) +
                         " parameter(s)");
    }
  };
  if (name == "beta") {
    expect(2);
    spec = {Family::beta, params[0], params[1]};
  } else if (name == "uniform") {
    expect(2);
    spec = {Family::uniform, params[0], params[1]};
  } else if (name == "normal") {
    expect(2);
    spec = {Family::normal, params[0], params[1]};
  } else if (name == "jeffreys-poisson") {
    expect(2);
    spec = {Family::jeffreys_poisson, params[0], params[1]};
  } else if (name == "point") {
    expect(1);
    spec = {Family::point, params[0], 0.0};
  } else {
    throw InvalidPrior("unknown prior family '" + std::string(name) + "'");
  }
  spec.validate();
  return spec;
}

std::string PriorSpec::to_string() const {
  std::ostringstream out;
  out.precision(17);
  switch (family) {
    case Family::beta:
      out << "beta:" << p1 << "," << p2;
      break;
    case Family::uniform:
      out << "uniform:" << p1 << "," << p2;
      break;
    case Family::normal:
      out << "normal:" << p1 << "," << p2;
      break;
    case Family::jeffreys_poisson:
      out << "jeffreys-poisson:" << p1 << "," << p2;
      break;
    case Family::point:
      out << "point:" << p1;
      break;
  }
  return out.str();
}

double sample_prior(const PriorSpec& prior, RngStream& stream) {
  prior.validate();
  switch (prior.family) {
    case PriorSpec::Family::beta:
      return stream.beta(prior.p1, prior.p2);
    case PriorSpec::Family::uniform:
      return prior.p1 + stream.uniform() * (prior.p2 - prior.p1);
    case PriorSpec::Family::normal:
      return stream.normal(prior.p1, std::sqrt(prior.p2));
    case PriorSpec::Family::jeffreys_poisson: {
      // Inverse CDF of the truncated lambda^(-1/2) density:
      // F(x) = (sqrt(x) - sqrt(lo)) / (sqrt(hi) - sqrt(lo)).
      const double rlo = std::sqrt(prior.p1);
      const double rhi = std::sqrt(prior.p2);
      const double r = rlo + stream.uniform() * (rhi - rlo);
      return r * r;
    }
    case PriorSpec::Family::point:
      return prior.p1;
  }
  throw InvalidPrior("unreachable prior family");
}

double log_density(const PriorSpec& prior, double theta) {
  switch (prior.family) {
    case PriorSpec::Family::beta:
      if (!(theta > 0.0) || !(theta < 1.0)) return kNegInf;
      return (prior.p1 - 1.0) * std::log(theta) +
             (prior.p2 - 1.0) * std::log1p(-theta);
    case PriorSpec::Family::uniform:
      return (theta >= prior.p1 && theta <= prior.p2) ? 0.0 : kNegInf;
    case PriorSpec::Family::normal: {
      const double d = theta - prior.p1;
      return -d * d / (2.0 * prior.p2);
    }
    case PriorSpec::Family::jeffreys_poisson:
      if (!(theta >= prior.p1) || !(theta <= prior.p2) || !(theta > 0.0)) {
        return kNegInf;
      }
      return -0.5 * std::log(theta);
    case PriorSpec::Family::point:
      return theta == prior.p1 ? 0.0 : kNegInf;
  }
  return kNegInf;
}

}  // namespace ballpit
