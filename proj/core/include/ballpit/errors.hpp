// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef BALLPIT_ERRORS_HPP
#define BALLPIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ballpit {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run or experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Observations violate the active model's data contract.
class InvalidData : public Error {
 public:
  using Error::Error;
};

/// Prior parameters violate the family's constraints.
class InvalidPrior : public Error {
 public:
  using Error::Error;
};

/// A point was evaluated outside the model support.
class OutOfSupport : public Error {
 public:
  using Error::Error;
};

/// 1000 consecutive prior draws all fell outside the model support.
class SupportExhausted : public Error {
 public:
  using Error::Error;
};

/// The log-likelihood gradient is not finite at the current point.
class NonFiniteGradient : public Error {
 public:
  using Error::Error;
};

/// No closed-form posterior exists for the requested model/prior pair.
class NoConjugateForm : public Error {
 public:
  using Error::Error;
};

/// An iterative optimizer hit its iteration cap without converging.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Too few draws or chains to compute the requested statistic.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

}  // namespace ballpit

#endif  // BALLPIT_ERRORS_HPP
