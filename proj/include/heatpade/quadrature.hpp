#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "heatpade/error.hpp"

namespace heatpade {

struct QuadratureOptions {
  std::size_t initial_panels = 256;
  std::size_t max_panels = std::size_t{1} << 20;
  double relative_tolerance = 1e-12;
};

// Trapezoidal rule for 2*pi-periodic integrands on [0, 2*pi), doubling the
// panel count until every component changes by less than the relative
// tolerance. The reference magnitude for a component is the integral of its
// absolute value, so integrals that vanish identically still terminate.
// `integrand(phi, out)` writes `components` values into out.
template <class F>
std::vector<double> periodic_trapezoid_n(std::size_t components, F&& integrand,
                                         const QuadratureOptions& opts = {}) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> sum(components, 0.0);
  std::vector<double> abs_sum(components, 0.0);
  std::vector<double> value(components, 0.0);

  auto accumulate = [&](std::size_t panels, std::size_t start, std::size_t stride) {
    const double h = two_pi / static_cast<double>(panels);
    for (std::size_t i = start; i < panels; i += stride) {
      integrand(h * static_cast<double>(i), std::span<double>(value));
      for (std::size_t k = 0; k < components; ++k) {
        sum[k] += value[k];
        abs_sum[k] += std::abs(value[k]);
      }
    }
  };

  std::size_t panels = opts.initial_panels;
  accumulate(panels, 0, 1);
  std::vector<double> estimate(components);
  for (std::size_t k = 0; k < components; ++k)
    estimate[k] = sum[k] * two_pi / static_cast<double>(panels);

  while (true) {
    if (panels * 2 > opts.max_panels) {
      throw Error(ErrorKind::QuadratureNotConverged,
                  "periodic trapezoid did not converge within " + std::to_string(opts.max_panels) +
                      " panels");
    }
    panels *= 2;
    accumulate(panels, 1, 2);  // only the new midpoints
    const double h = two_pi / static_cast<double>(panels);
    bool converged = true;
    for (std::size_t k = 0; k < components; ++k) {
      const double next = sum[k] * h;
      if (std::abs(next - estimate[k]) > opts.relative_tolerance * abs_sum[k] * h) converged = false;
      estimate[k] = next;
    }
    if (converged) return estimate;
  }
}

template <std::size_t K, class F>
std::array<double, K> periodic_trapezoid(F&& integrand, const QuadratureOptions& opts = {}) {
  const auto v = periodic_trapezoid_n(
      K,
      [&](double phi, std::span<double> out) {
        const std::array<double, K> r = integrand(phi);
        for (std::size_t k = 0; k < K; ++k) out[k] = r[k];
      },
      opts);
  std::array<double, K> r{};
  for (std::size_t k = 0; k < K; ++k) r[k] = v[k];
  return r;
}

template <class F>
double periodic_trapezoid_scalar(F&& integrand, const QuadratureOptions& opts = {}) {
  return periodic_trapezoid<1>([&](double phi) { return std::array<double, 1>{integrand(phi)}; },
                               opts)[0];
}

}  // namespace heatpade
