#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace phaseless {

/// Integration rules on a uniform grid.
///  - trapezoid: second order, monotone (nonnegative weights)
///  - cubic: fourth order, per interval the integral of the cubic through the
///    four nearest samples; exact for cubic polynomials
enum class QuadratureRule { trapezoid, cubic };

/// Running integral out[i] = int_{x_0}^{x_i} y dx on a uniform grid of step dx.
template <typename T>
std::vector<T> cumulative_integral(std::span<const T> y, double dx,
                                   QuadratureRule rule = QuadratureRule::trapezoid) {
  const std::size_t n = y.size();
  std::vector<T> out(n, T{});
  if (n < 2) return out;
  const bool cubic = rule == QuadratureRule::cubic && n >= 4;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    T piece;
    if (!cubic) {
      piece = (y[i] + y[i + 1]) * (dx / 2.0);
    } else if (i == 0) {
      piece = (9.0 * y[0] + 19.0 * y[1] - 5.0 * y[2] + y[3]) * (dx / 24.0);
    } else if (i + 2 == n) {
      piece = (9.0 * y[n - 1] + 19.0 * y[n - 2] - 5.0 * y[n - 3] + y[n - 4]) * (dx / 24.0);
    } else {
      piece = (-y[i - 1] + 13.0 * y[i] + 13.0 * y[i + 1] - y[i + 2]) * (dx / 24.0);
    }
    out[i + 1] = out[i] + piece;
  }
  return out;
}

template <typename T>
std::vector<T> cumulative_integral(const std::vector<T>& y, double dx,
                                   QuadratureRule rule = QuadratureRule::trapezoid) {
  return cumulative_integral(std::span<const T>(y), dx, rule);
}

/// Integral of y over the whole uniform grid.
template <typename T>
T integrate(std::span<const T> y, double dx, QuadratureRule rule = QuadratureRule::trapezoid) {
  if (y.size() < 2) return T{};
  if (rule == QuadratureRule::trapezoid || y.size() < 4) {
    T sum = (y.front() + y.back()) * 0.5;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) sum += y[i];
    return sum * dx;
  }
  return cumulative_integral(y, dx, rule).back();
}

template <typename T>
T integrate(const std::vector<T>& y, double dx, QuadratureRule rule = QuadratureRule::trapezoid) {
  return integrate(std::span<const T>(y), dx, rule);
}

}  // namespace phaseless
