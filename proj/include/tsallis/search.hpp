#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <vector>

#include "tsallis/errors.hpp"

namespace tsallis {

struct ScalarMaximum {
  double argmax;
  double value;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi], stopping
/// once the bracket is narrower than tolerance.
template <std::invocable<double> F>
ScalarMaximum golden_section_maximize(F&& f, double lo, double hi, double tolerance) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

/// Global maximum of f over [lo, hi]: a uniform scan with spacing at most
/// grid_step locates the best sample, then golden-section search refines it
/// inside the neighbouring grid cells. An endpoint wins whenever the refined
/// point is not strictly better, so monotone functions report the endpoint.
template <std::invocable<double> F>
ScalarMaximum maximize_on_interval(F&& f, double lo, double hi, double grid_step = 1e-2, double tolerance = 1e-6) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw ParameterError("maximize_on_interval: need finite lo < hi");
  }
  if (!(grid_step > 0.0) || !(tolerance > 0.0)) {
    throw ParameterError("maximize_on_interval: grid_step and tolerance must be positive");
  }

  const auto cells = static_cast<std::size_t>(std::ceil((hi - lo) / grid_step - 1e-9));
  const std::size_t n = cells == 0 ? 1 : cells;
  auto grid_point = [&](std::size_t i) { return i == n ? hi : lo + (hi - lo) * static_cast<double>(i) / n; };

  std::size_t best = 0;
  double best_value = f(lo);
  for (std::size_t i = 1; i <= n; ++i) {
    const double v = f(grid_point(i));
    if (v > best_value) {
      best = i;
      best_value = v;
    }
  }

  const double left = grid_point(best == 0 ? 0 : best - 1);
  const double right = grid_point(best == n ? n : best + 1);
  const ScalarMaximum refined = golden_section_maximize(f, left, right, tolerance);
  if (refined.value > best_value) return refined;
  return {grid_point(best), best_value};
}

}  // namespace tsallis
