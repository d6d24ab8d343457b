#pragma once

#include <algorithm>

namespace spinx {

// Two-part comparison threshold: abs + rel * scale. The scale is the
// magnitude of the quantities being compared (usually an order-unit norm).
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;

  constexpr double bound(double scale) const noexcept {
    return abs + rel * std::max(scale, 0.0);
  }

  constexpr bool near(double a, double b, double scale) const noexcept {
    const double d = a > b ? a - b : b - a;
    return d <= bound(scale);
  }

  static constexpr Tolerance uniform(double t) noexcept { return {t, t}; }
};

inline constexpr Tolerance kDefaultTolerance{};

}  // namespace spinx
