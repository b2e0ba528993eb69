// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef BALLPIT_SUPPORT_HPP
#define BALLPIT_SUPPORT_HPP

#include <cmath>
#include <limits>

namespace ballpit {

/// Parameter support as an interval with individually open or closed ends.
/// NaN and the infinities are never inside.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool open_lo = true;
  bool open_hi = true;

  static Interval open(double lo, double hi) { return {lo, hi, true, true}; }
  static Interval closed(double lo, double hi) {
    return {lo, hi, false, false};
  }
  static Interval real_line() { return {}; }

  bool contains(double x) const {
    if (std::isnan(x)) return false;
    if (open_lo ? !(x > lo) : !(x >= lo)) return false;
    if (open_hi ? !(x < hi) : !(x <= hi)) return false;
    return true;
  }
};

}  // namespace ballpit

#endif  // BALLPIT_SUPPORT_HPP
