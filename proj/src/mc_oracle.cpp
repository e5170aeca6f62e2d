#include "heatpade/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "heatpade/error.hpp"
#include "heatpade/parallel.hpp"

namespace heatpade {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// One independent stream per (seed, walker).
class WalkerStream {
 public:
  WalkerStream(std::uint64_t seed, std::uint64_t walker) {
    std::uint64_t mix = seed;
    state_ = splitmix64(mix) ^ (walker * 0xd1b54a32d192ed03ULL);
    (void)splitmix64(state_);
  }

  // Uniform in (0, 1).
  double uniform() { return (static_cast<double>(splitmix64(state_) >> 11) + 0.5) * 0x1.0p-53; }

  // Two independent standard normals (Box-Muller).
  std::pair<double, double> normal_pair() {
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  std::uint64_t state_;
};

void validate(const McConfig& cfg) {
  if (cfg.walkers < 1) throw Error(ErrorKind::InvalidArgument, "walkers must be >= 1");
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw Error(ErrorKind::InvalidArgument, "dt must be positive");
  for (std::size_t i = 0; i < cfg.t_grid.size(); ++i) {
    if (!(cfg.t_grid[i] >= 0.0) || !std::isfinite(cfg.t_grid[i]))
      throw Error(ErrorKind::InvalidArgument, "observation times must be finite and >= 0");
    if (i > 0 && cfg.t_grid[i] < cfg.t_grid[i - 1])
      throw Error(ErrorKind::InvalidArgument, "observation times must be ascending");
  }
}

}  // namespace

std::vector<McSample> simulate_survival(const BoundaryCurve& curve, const McConfig& cfg) {
  validate(cfg);
  if (cfg.t_grid.empty()) return {};

  std::vector<std::int64_t> step_of(cfg.t_grid.size());
  for (std::size_t i = 0; i < cfg.t_grid.size(); ++i)
    step_of[i] = std::llround(cfg.t_grid[i] / cfg.dt);
  const std::int64_t last_step = step_of.back();
  const double sigma = std::sqrt(2.0 * cfg.dt);
  const double box = curve.max_radius();

  // absorbed[w] = first step whose end point lies outside; last_step + 1 if never.
  const auto walkers = static_cast<std::size_t>(cfg.walkers);
  std::vector<std::int64_t> absorbed(walkers);
  parallel_for(walkers, cfg.threads, [&](std::size_t w) {
    WalkerStream rng(cfg.seed, w);
    double x = 0.0;
    double y = 0.0;
    do {
      x = box * (2.0 * rng.uniform() - 1.0);
      y = box * (2.0 * rng.uniform() - 1.0);
    } while (!curve.contains(x, y));

    std::int64_t step = 1;
    for (; step <= last_step; ++step) {
      const auto [gx, gy] = rng.normal_pair();
      x += sigma * gx;
      y += sigma * gy;
      if (!curve.contains(x, y)) break;
    }
    absorbed[w] = step;
  });

  std::vector<McSample> out;
  out.reserve(cfg.t_grid.size());
  for (std::size_t i = 0; i < cfg.t_grid.size(); ++i) {
    const std::int64_t k = step_of[i];
    const auto alive = std::count_if(absorbed.begin(), absorbed.end(), [k](std::int64_t a) { return a > k; });
    const double s = static_cast<double>(alive) / static_cast<double>(walkers);
    out.push_back({cfg.t_grid[i], s, std::sqrt(s * (1.0 - s) / static_cast<double>(walkers))});
  }
  return out;
}

}  // namespace heatpade
