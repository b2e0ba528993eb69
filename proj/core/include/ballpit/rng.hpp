// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef BALLPIT_RNG_HPP
#define BALLPIT_RNG_HPP

#include <cstdint>
#include <random>

namespace ballpit {

/// Deterministic random stream. A stream is derived from a root seed and a
/// stream id, so independent consumers (one per ball) can run in any order or
/// in parallel and still produce identical draws.
///
/// All transforms are implemented locally on top of the engine's 64-bit
/// output, which the standard pins down exactly; nothing here depends on
/// unspecified distribution algorithms, so sequences are stable across
/// standard libraries.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  /// Raw 64-bit engine output.
  std::uint64_t next();

  /// Uniform on [0, 1).
  double uniform();

  /// Uniform on (0, 1); safe to pass through log().
  double uniform_pos();

  /// Gaussian via Box-Muller, one variate per call.
  double normal(double mean, double sd);

  /// Gamma(shape, 1) via the Marsaglia-Tsang squeeze; shape > 0.
  double gamma(double shape);

  /// Beta(a, b) as a ratio of two gamma variates.
  double beta(double a, double b);

  bool operator==(const RngStream&) const = default;

 private:
  std::mt19937_64 engine_;
};

}  // namespace ballpit

#endif  // BALLPIT_RNG_HPP
