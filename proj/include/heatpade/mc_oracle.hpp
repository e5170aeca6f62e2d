#pragma once

#include <cstdint>
#include <vector>

#include "heatpade/geometry.hpp"

namespace heatpade {

struct McConfig {
  std::int64_t walkers = 100000;
  double dt = 1e-5;
  std::vector<double> t_grid;  // ascending, >= 0
  std::uint64_t seed = 1;
  int threads = 0;  // 0: default_thread_count()
};

struct McSample {
  double t;
  double survival;
  double stderr_;
};

/// Euler-Maruyama walkers with unit diffusion constant, started uniformly in
/// the domain and absorbed at the end of the first step that lands outside.
/// Each observation time is rounded to the nearest whole step. Output is
/// bit-identical for a fixed seed regardless of the thread count.
std::vector<McSample> simulate_survival(const BoundaryCurve& curve, const McConfig& cfg);

}  // namespace heatpade
